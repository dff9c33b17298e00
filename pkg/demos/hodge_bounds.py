"""Ord(Lambda) by two routes over the configuration sweep, and the bounds check.

    python3 demos/hodge_bounds.py
"""

from collections import Counter

from pcovers.hodge import ReductionConfig, ord_lambda, sweep_configs

for cfg in (ReductionConfig(2, "beta", 1, 2), ReductionConfig(3, "alpha", 1, 1),
            ReductionConfig(2, "alpha", 0, 1)):
    r = ord_lambda(cfg)
    print(f"g={cfg.g} {cfg.kind}_{cfg.j} b={cfg.b}: disc {r.nu_disc}, sum m_i {r.sum_mi}, "
          f"route 1 {r.route1}, closed form {r.ord_lambda}, {r.lower} <= . <= {r.upper}")

odd = [ord_lambda(c) for c in sweep_configs()]
print(f"\nodd residue characteristic: {sum(r.ok for r in odd)}/{len(odd)} within the bounds, "
      f"routes agree on all {sum(r.route1 == r.ord_lambda for r in odd)}")

# in residue characteristic 2 the printed closed forms are taken literally
cfgs = sweep_configs(char2=True)
outside = Counter((c.kind, c.j) for c in cfgs if not ord_lambda(c).ok)
print(f"residue characteristic 2: {len(cfgs) - sum(outside.values())}/{len(cfgs)} within the "
      f"bounds; outside: {dict(outside)}")
c = ReductionConfig(3, "beta", 1, 2, 0, 1)
r = ord_lambda(c)
print(f"  e.g. g=3 beta_1 b=2: ord {r.ord_lambda} < g*delta = {r.lower}")
