"""Probe whether P^c of a matroid intersection equals the intersection of the two P^c.

Default pairing: the graphic matroid of K4 with the partition matroid that
allows one edge at vertex 0. The outcome is recorded, not asserted.
"""

import argparse
import json
from dataclasses import dataclass

from cardmat.catalog import k4, k4_vertex_partition, seq
from cardmat.verify import probe_intersection_conjecture


@dataclass
class Config:
    trials: int = 500
    seed: int = 0
    c: tuple = (1, 3)


def parse_args() -> Config:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--trials", type=int, default=Config.trials)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--c", type=lambda s: tuple(int(t) for t in s.split(",")), default=Config.c)
    return Config(**vars(p.parse_args()))


def main(cfg: Config) -> int:
    report = probe_intersection_conjecture(k4(), k4_vertex_partition(), seq(*cfg.c), cfg.trials, cfg.seed)
    print(json.dumps(report.to_json(), indent=2))
    return 0


if __name__ == "__main__":
    raise SystemExit(main(parse_args()))
