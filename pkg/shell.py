import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent / "src"))

import rbcli  # noqa: E402

sys.exit(rbcli.main())
