# -*- coding: utf-8 -*-
"""``python -m`` 実行用のエントリポイント。"""

from cli import main

if __name__ == "__main__":
    raise SystemExit(main())
