#gui/stream_worker.py
import logging

from PySide6.QtCore import QObject, QThread, Signal

from gui.hull_plot import PlotData
from utils.delta_core import DeltaStream
from utils.errors import DeltaError
from utils.stream_runner import read_input


class LogSignal(QObject):
    message = Signal(str)


class QtLogHandler(logging.Handler):
    """Forwards formatted log records to the console pane through a Qt signal"""

    def __init__(self, fmt, datefmt):
        super().__init__()
        self.bridge = LogSignal()
        self.setFormatter(logging.Formatter(fmt, datefmt))

    def emit(self, record):
        self.bridge.message.emit(self.format(record))


class StreamWorkerThread(QThread):
    """Streams a file through DeltaStream and publishes snapshots as it goes"""

    progress_update = Signal(str)
    snapshot_ready = Signal(object)
    stream_finished = Signal(bool, str)

    def __init__(self, path, engine="amortized", redraw_every=None):
        super().__init__()
        self.path = path
        self.engine = engine
        self.redraw_every = redraw_every
        self._should_stop = False

    def stop(self):
        self._should_stop = True

    def run(self):
        try:
            data = read_input(self.path)
            stream = DeltaStream(engine=self.engine)
            every = self.redraw_every or max(1, len(data) // 200)
            self.progress_update.emit(f"Streaming {len(data)} bytes with the {self.engine} engine")
            for symbol in data:
                if self._should_stop:
                    self.stream_finished.emit(False, "stopped")
                    return
                report = stream.push(symbol)
                if report.i % every == 0 or report.i == len(data):
                    self.snapshot_ready.emit(PlotData.from_snapshot(stream.snapshot()))
            if stream.last_report is None:
                self.stream_finished.emit(False, "input is empty")
                return
            delta = stream.last_report.delta
            self.stream_finished.emit(True, f"delta = {delta} after {stream.i} bytes")
        except DeltaError as e:
            if not self._should_stop:
                self.stream_finished.emit(False, str(e))
