"""
Running the verification checks
================================

Every check pairs an enumeration with a formula or a second enumeration and
returns a report. The same checks back the ``sphericalpf verify`` command.
"""

import json

from sphericalpf import crosscheck

for n in range(2, 8):
    r = crosscheck.check_theorem_main(n)
    print(r.check_name, n, r.lhs, r.rhs, r.verdict)

r = crosscheck.check_kreweras(4)
print(r.verdict, r.note)

r = crosscheck.check_u_correspondence(5, 2)
print(json.dumps(r.to_dict(timing=False), indent=2))

for n in range(2, 7):
    print("raised sets", n, crosscheck.check_raised_set_formula(n).verdict)
