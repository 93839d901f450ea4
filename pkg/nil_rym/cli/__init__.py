from .commands import main
from .documents import TupleDocument, parse, read_document, serialize, write_document
from .reports import Report
