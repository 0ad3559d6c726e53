# Exhaustive sweeps: every orbit representative, every check, with the
# report structure used by `zerosum verify`.
import json

from zerosum.verify import CHECKS, SweepSpec, replay, run_sweep

r = run_sweep(SweepSpec(5, 5, checks=CHECKS), workers=1)
print(json.dumps(r.comparable(), indent=1))

# sharding splits the candidate stream; merged reports are identical
spec = SweepSpec(7, 7, checks=("dim_theorems", "minimal_counts"))
one = run_sweep(spec, workers=1)
many = run_sweep(spec, workers=3)
print("sharded == unsharded:", one.comparable() == many.comparable(), f"({one.elapsed_ms} ms vs {many.elapsed_ms} ms)")

# a sweep with a failure; each record can be replayed on its own
r = run_sweep(SweepSpec(7, 6, "zero_sum", checks=("dim_theorems", "exceptional")), workers=1)
print("exit code", r.exit_code)
for f in r.failures:
    print(f)
    print("replay:", replay(f))
