#utils/file_naming.py
from pathlib import Path


class FileNamingUtils:
    """Utility class for consistent output file naming"""

    @staticmethod
    def sanitize_filename(filename):
        """Remove invalid characters from filename"""
        invalid_chars = '<>:"/\\|?*'
        for char in invalid_chars:
            filename = filename.replace(char, '_')
        return filename.strip()

    @staticmethod
    def source_label(input_path):
        """Stem of the input file, or 'stdin'"""
        if not input_path or input_path == '-':
            return 'stdin'
        return Path(input_path).stem or 'input'

    @staticmethod
    def generate_snapshot_name(input_path, position):
        """Generate name for hull snapshots
        Format: [Snapshot] Inputname - i=position.json
        """
        label = FileNamingUtils.source_label(input_path)
        filename = f"[Snapshot] {label} - i={position}.json"
        return FileNamingUtils.sanitize_filename(filename)

    @staticmethod
    def snapshot_path(snapshot_dir, input_path, position):
        return Path(snapshot_dir) / FileNamingUtils.generate_snapshot_name(input_path, position)
