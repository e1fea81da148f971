"""Evidence sweep: rational points of the triangle fall into the zero vertex.

Also checks that the closed-form return map matches Farey-level iteration on a
random sample.  Nothing here is a proof; the reports only count cases.
"""

import json

from simplex_gauss.analysis import conjecture_harness
from simplex_gauss.verify import run_suite

ev = conjecture_harness("rational-zero", dim=2, max_den=25)
print(json.dumps(ev.to_json(), indent=1))

rep = run_suite("first-return-equiv", dim=3, samples=2000, seed=1)
print(json.dumps(rep.to_json(include_time=True), indent=1))
