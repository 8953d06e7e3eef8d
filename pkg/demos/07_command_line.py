"""
The command-line tool writes deterministic certification bundles and field
files. This script drives it in-process on a temporary directory.
"""

import json
import tempfile
from pathlib import Path

from wignercert.cli import main

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    code = main(["certify", "--state", "example_final1", "--out", str(tmp / "final1.json")])
    bundle = json.loads((tmp / "final1.json").read_text())
    print("exit code", code, "status", bundle["status"], "digest", bundle["inputs_digest"])
    print()
    main(["transform", "--which", "wigner", "--state", '{"kind": "hermite", "k": 2}', "--out", str(tmp / "h2.wcf")])
    main(["certify", "--input", str(tmp / "h2.wcf"), "--certs", "rsup,refined_rsup_ineq1,positivity_probe",
          "--out", str(tmp / "h2.json")])
    print()
    main(["sweep", "--param", "mixture_weight", "--start", "0", "--stop", "1", "--num", "3", "--grid-points", "128"])
