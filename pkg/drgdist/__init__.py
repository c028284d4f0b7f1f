__version__: str = "0.1.0"  # Must be "<major>.<minor>.<patch>", all numbers
