from pathlib import Path

TABLES_DIR = Path(__file__).resolve().parent.parent / "tables"
