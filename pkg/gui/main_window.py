#gui/main_window.py
import logging
import sys
from datetime import datetime

from PySide6.QtWidgets import (QApplication, QMainWindow, QWidget, QVBoxLayout, QHBoxLayout,
                               QPushButton, QLabel, QTextEdit)
from PySide6.QtCore import Qt, QPointF
from PySide6.QtGui import QColor, QPainter, QPen, QPolygonF

from gui.help_dialog import HelpDialog
from gui.hull_plot import PlotFrame, load_snapshot
from gui.stream_worker import QtLogHandler, StreamWorkerThread

logger = logging.getLogger(__name__)

POINT_COLOR = QColor("#9147ff")
HULL_COLOR = QColor("#22c55e")
TANGENT_COLOR = QColor("#ef4444")


class HullCanvas(QWidget):
    """Points, their upper hull and the tangent from the origin"""

    def __init__(self, parent=None):
        super().__init__(parent)
        self.plot = None
        self.setMinimumSize(500, 350)

    def set_plot(self, plot):
        self.plot = plot
        self.update()

    def paintEvent(self, event):
        painter = QPainter(self)
        painter.setRenderHint(QPainter.Antialiasing)
        painter.fillRect(self.rect(), QColor("#1e1e1e"))
        if self.plot is None or not self.plot.points:
            painter.setPen(QColor("#888888"))
            painter.drawText(self.rect(), Qt.AlignCenter, "No data")
            return

        frame = PlotFrame.fit(self.plot, self.width(), self.height())

        painter.setPen(QPen(QColor("#4a4a4a"), 1))
        ox, oy = frame.to_pixel(0, 0)
        ex, _ = frame.to_pixel(frame.max_x, 0)
        _, ey = frame.to_pixel(0, frame.max_y)
        painter.drawLine(QPointF(ox, oy), QPointF(ex, oy))
        painter.drawLine(QPointF(ox, oy), QPointF(ox, ey))

        (x0, y0), (x1, y1) = frame.tangent_segment(self.plot.delta)
        painter.setPen(QPen(TANGENT_COLOR, 1.5))
        painter.drawLine(QPointF(x0, y0), QPointF(x1, y1))

        painter.setPen(QPen(HULL_COLOR, 2))
        painter.drawPolyline(QPolygonF([QPointF(*frame.to_pixel(k, c))
                                        for k, c in self.plot.hull_points()]))

        painter.setPen(Qt.NoPen)
        painter.setBrush(POINT_COLOR)
        radius = 3 if len(self.plot.points) < 200 else 1.5
        for k, c in self.plot.points:
            painter.drawEllipse(QPointF(*frame.to_pixel(k, c)), radius, radius)


class MainWindow(QMainWindow):
    def __init__(self, engine="amortized"):
        super().__init__()
        self.engine = engine
        self.worker = None

        self.setWindowTitle("Delta Viewer")
        self.setGeometry(300, 70, 900, 700)
        self.setMinimumSize(700, 600)

        self.apply_dark_theme()

        central_widget = QWidget()
        self.setCentralWidget(central_widget)
        main_layout = QVBoxLayout(central_widget)
        main_layout.setSpacing(10)
        main_layout.setContentsMargins(10, 10, 10, 10)

        header_layout = QHBoxLayout()
        self.status_label = QLabel("No data")
        self.status_label.setStyleSheet("font-size: 14px; font-weight: bold;")
        header_layout.addWidget(self.status_label)
        header_layout.addStretch()

        self.stop_button = QPushButton("Stop")
        self.stop_button.setEnabled(False)
        self.stop_button.clicked.connect(self.stop_stream)
        self.stop_button.setStyleSheet("""
            QPushButton {
                padding: 6px 12px;
                background-color: #9147ff;
                border: none;
                border-radius: 4px;
                color: #ffffff;
                font-weight: bold;
            }
            QPushButton:disabled {
                background-color: #4a4a4a;
            }
        """)
        header_layout.addWidget(self.stop_button)

        help_button = QPushButton("?")
        help_button.clicked.connect(self.show_help)
        help_button.setFixedSize(30, 30)
        help_button.setStyleSheet("""
            QPushButton {
                background-color: #4a4a4a;
                border: none;
                border-radius: 15px;
                color: #ffffff;
                font-weight: bold;
                font-size: 14px;
            }
            QPushButton:hover {
                background-color: #5a5a5a;
            }
        """)
        header_layout.addWidget(help_button)
        main_layout.addLayout(header_layout)

        self.canvas = HullCanvas()
        main_layout.addWidget(self.canvas, stretch=1)

        self.console_output = QTextEdit()
        self.console_output.setReadOnly(True)
        self.console_output.setMaximumHeight(140)
        self.console_output.setStyleSheet("""
            QTextEdit {
                background-color: #1e1e1e;
                border: 1px solid #3a3a3a;
                font-family: Consolas, monospace;
                font-size: 11px;
            }
        """)
        main_layout.addWidget(self.console_output)

    def apply_dark_theme(self):
        self.setStyleSheet("""
            QMainWindow {
                background-color: #1e1e1e;
            }
            QWidget {
                background-color: #2b2b2b;
                color: #ffffff;
                font-family: 'Segoe UI', Arial, sans-serif;
            }
            QLabel {
                color: #ffffff;
            }
        """)

    def log_message(self, message):
        """Add message to console with timestamp"""
        timestamp = datetime.now().strftime("%H:%M:%S")
        self.append_console(f"[{timestamp}] {message}")

    def append_console(self, line):
        self.console_output.append(line)
        cursor = self.console_output.textCursor()
        cursor.movePosition(cursor.MoveOperation.End)
        self.console_output.setTextCursor(cursor)

    def show_plot(self, plot):
        self.canvas.set_plot(plot)
        self.status_label.setText(
            f"n = {plot.n}   R = {plot.R}   delta = {plot.delta} ≈ {float(plot.delta):.4f}"
            f"   tangency k = {plot.tangency_k}"
        )

    def open_snapshot(self, path):
        plot = load_snapshot(path)
        self.show_plot(plot)
        self.log_message(f"Loaded snapshot {path}")

    def start_stream(self, path):
        self.worker = StreamWorkerThread(path, self.engine)
        self.worker.progress_update.connect(self.log_message)
        self.worker.snapshot_ready.connect(self.show_plot)
        self.worker.stream_finished.connect(self.on_stream_finished)
        self.stop_button.setEnabled(True)
        self.worker.start()

    def stop_stream(self):
        if self.worker is not None:
            self.worker.stop()

    def on_stream_finished(self, success, message):
        self.stop_button.setEnabled(False)
        self.log_message(("Done: " if success else "Stopped: ") + message)

    def show_help(self):
        HelpDialog(self).exec()

    def closeEvent(self, event):
        if self.worker is not None and self.worker.isRunning():
            self.worker.stop()
            self.worker.wait(2000)
        super().closeEvent(event)


def launch_viewer(snapshot_path=None, stream_path=None, engine="amortized"):
    app = QApplication.instance() or QApplication(sys.argv[:1])
    app.setApplicationName("Delta Viewer")

    window = MainWindow(engine)
    handler = QtLogHandler("[%(asctime)s] %(levelname)s %(message)s", "%H:%M:%S")
    handler.bridge.message.connect(window.append_console)
    logging.getLogger().addHandler(handler)

    if snapshot_path:
        window.open_snapshot(snapshot_path)
    if stream_path:
        window.start_stream(stream_path)
    window.show()
    try:
        return app.exec()
    finally:
        logging.getLogger().removeHandler(handler)
