"""Randomized completeness check of the linear description on the catalog.

Prints one JSON report per instance. With --no-fs the forbidden set
inequalities are left out, which should produce failures.
"""

import argparse
import json
from dataclasses import dataclass

from cardmat.catalog import instances
from cardmat.verify import verify_completeness


@dataclass
class Config:
    trials: int = 200
    seed: int = 0
    include_fs: bool = True
    extra: bool = False


def parse_args() -> Config:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--trials", type=int, default=Config.trials)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--no-fs", dest="include_fs", action="store_false")
    p.add_argument("--extra", action="store_true", help="include the larger separation instances")
    return Config(**vars(p.parse_args()))


def main(cfg: Config) -> int:
    failed = 0
    for name, m, c in instances(cfg.extra):
        report = verify_completeness(m, c, cfg.trials, cfg.seed, include_fs=cfg.include_fs,
                                     instance=f"{name} c={list(c)}")
        doc = report.to_json()
        doc["failures"] = len(doc["failures"])
        doc["elapsed_s"] = round(report.elapsed, 3)
        print(json.dumps(doc))
        failed += not report.passed
    return 1 if failed and cfg.include_fs else 0


if __name__ == "__main__":
    raise SystemExit(main(parse_args()))
