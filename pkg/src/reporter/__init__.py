from .markdown_generator import MarkdownGenerator
from .record_writer import RecordWriter, format_float

__all__ = ["MarkdownGenerator", "RecordWriter", "format_float"]
