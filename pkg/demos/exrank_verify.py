"""Full cross-check on the dims 2,3,4,3 example (takes under a minute)."""

import json
import time

from quiverpoly.engine import verify_all
from quiverpoly.quivercore import RankArray

r = RankArray.from_rows([[2], [2, 3], [1, 2, 4], [0, 1, 2, 3]])
start = time.perf_counter()
report = verify_all(r)
print(json.dumps(report.to_json(), indent=2, sort_keys=True))
print(f"ok={report.ok} in {time.perf_counter() - start:.1f}s")
