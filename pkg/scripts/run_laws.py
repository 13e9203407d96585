"""Run the law suite, optionally under every mutation, and print text reports.

    python3 scripts/run_laws.py --seed 42
    python3 scripts/run_laws.py --mutations
"""

from __future__ import annotations

import argparse

from voltgraph.laws import LawConfig, run_all
from voltgraph.mutations import MUTATIONS


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--iterations", type=int, default=30)
    p.add_argument("--sweep", action="store_true")
    p.add_argument("--mutations", action="store_true", help="also run once per mutation")
    args = p.parse_args()
    for mutation in [None] + (list(MUTATIONS) if args.mutations else []):
        print(f"== mutation: {mutation or 'none'}")
        for r in run_all(LawConfig(seed=args.seed, iterations=args.iterations, mutation=mutation, sweep=args.sweep)):
            print(r.to_text())


if __name__ == "__main__":
    main()
