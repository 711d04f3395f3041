"""Compare every facet characterization and lemma with the enumeration oracle.

Walks all subsets F of each small instance and prints the disagreements as
JSON lines, followed by a per-instance count.
"""

import argparse
import json
from dataclasses import dataclass

from cardmat.catalog import instances
from cardmat.sweeps import dimension_check, lemma_sweep, rank_and_fs_sweep, single_k_sweep


@dataclass
class Config:
    max_size: int = 8
    extra: bool = True


def parse_args() -> Config:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-size", type=int, default=Config.max_size)
    p.add_argument("--catalog-only", dest="extra", action="store_false")
    return Config(**vars(p.parse_args()))


def main(cfg: Config) -> int:
    seen = set()
    total = 0
    for name, m, c in instances(cfg.extra):
        if m.n > cfg.max_size:
            continue
        found = rank_and_fs_sweep(m, c)
        dim = dimension_check(m, c)
        if dim is not None:
            found.append(dim)
        if repr(m) not in seen:
            seen.add(repr(m))
            found += single_k_sweep(m) + lemma_sweep(m)
        for d in found:
            print(json.dumps({"instance": name, "c": list(c), **d.to_json()}))
        print(json.dumps({"instance": name, "c": list(c), "discrepancies": len(found)}))
        total += len(found)
    return 1 if total else 0


if __name__ == "__main__":
    raise SystemExit(main(parse_args()))
