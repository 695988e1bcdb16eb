"""Allow running weavekit as a module: python -m weavekit"""

from .cli import main

if __name__ == "__main__":
    main()
