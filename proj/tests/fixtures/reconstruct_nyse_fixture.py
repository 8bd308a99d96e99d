#!/usr/bin/env python3
"""Rebuild the NYSE-shaped return fixtures under tests/data.

The raw index data is not redistributable. What is published are the
position-count matrices for the whole period, five subperiods and one
shuffled surrogate, plus the whole-sample pattern frequency table (which
covers the first four subperiods, 2440 weeks). This script solves small
integer programs for pattern counts that reproduce every one of those
matrices, then emits one synthetic return per day so that block-partitioned
weeks realise exactly those patterns.

Run from the repository root:  python3 tests/fixtures/reconstruct_nyse_fixture.py
"""

import datetime as dt
import itertools
import pathlib

import numpy as np
from scipy.optimize import LinearConstraint, milp

D = 5
PERMS = list(itertools.permutations(range(D)))  # lexicographic == pattern id order
NAMES = ["".join(map(str, p)) for p in PERMS]

# Pattern frequencies over the first four subperiods (2440 weeks).
PATTERN_COUNTS = {
    "42013": 7, "23041": 10, "24013": 10, "02413": 11, "13240": 11, "13402": 11,
    "23104": 11, "30124": 11, "40123": 11, "40132": 11, "41203": 11, "43102": 11,
    "20143": 12, "24310": 12, "42103": 12, "20341": 13, "23014": 13, "13024": 14,
    "14203": 14, "24103": 14, "24130": 14, "31024": 14, "41320": 14, "30142": 15,
    "30214": 15, "30412": 15, "40213": 15, "41023": 15, "12304": 16, "13420": 16,
    "14320": 16, "20314": 16, "23140": 16, "31204": 16, "04213": 17, "20413": 17,
    "40312": 17, "41230": 17, "20431": 18, "23410": 18, "40231": 18, "02143": 19,
    "02341": 19, "03142": 19, "10342": 19, "12340": 19, "23401": 19, "24031": 19,
    "30421": 19, "32041": 19, "41032": 19, "42130": 19, "43120": 19, "01324": 20,
    "12430": 20, "31042": 20, "31402": 20, "32401": 20, "32410": 20, "40321": 20,
    "42031": 20, "42301": 20, "43012": 20, "43210": 20, "10324": 21, "12043": 21,
    "13042": 21, "14032": 21, "34201": 21, "02134": 22, "03124": 22, "10432": 22,
    "21340": 22, "21430": 22, "24301": 22, "32014": 22, "34102": 22, "41302": 22,
    "01243": 23, "03241": 23, "10234": 23, "12034": 23, "14302": 23, "21034": 23,
    "32104": 23, "03214": 24, "04321": 24, "13204": 24, "14230": 24, "21043": 24,
    "21403": 24, "32140": 24, "42310": 24, "02431": 25, "04123": 25, "01423": 26,
    "03412": 26, "20134": 26, "34012": 26, "34210": 26, "01342": 27, "12403": 27,
    "31420": 27, "34021": 27, "43201": 27, "02314": 28, "10423": 28, "21304": 28,
    "01234": 29, "34120": 29, "10243": 30, "14023": 30, "01432": 31, "04132": 31,
    "04231": 31, "30241": 31, "31240": 31, "43021": 31, "03421": 34, "04312": 34,
}

SUBPERIODS = [
    [[182, 121, 105, 97, 105], [108, 145, 107, 124, 126], [108, 99, 120, 142, 141],
     [116, 119, 138, 132, 105], [96, 126, 140, 115, 133]],
    [[165, 111, 110, 107, 117], [138, 117, 111, 104, 140], [100, 125, 129, 131, 125],
     [112, 119, 129, 148, 102], [95, 138, 131, 120, 126]],
    [[109, 105, 133, 126, 137], [136, 124, 103, 119, 128], [89, 141, 147, 125, 108],
     [154, 117, 108, 123, 108], [122, 123, 119, 117, 129]],
    [[134, 106, 121, 128, 121], [112, 139, 117, 106, 136], [126, 115, 125, 115, 129],
     [131, 105, 121, 125, 128], [107, 145, 126, 136, 96]],
    [[47, 60, 68, 43, 52], [63, 47, 37, 56, 67], [56, 60, 43, 51, 60],
     [57, 45, 68, 53, 47], [47, 58, 54, 67, 44]],
]

SHUFFLED = [[506, 469, 501, 484, 480], [488, 508, 472, 498, 474],
            [513, 475, 491, 471, 490], [479, 491, 509, 482, 479],
            [454, 497, 467, 505, 517]]


def placement_matrix():
    """25 x 120 matrix: row (day*5 + pos) has a 1 where the pattern puts day at pos."""
    m = np.zeros((D * D, len(PERMS)))
    for k, p in enumerate(PERMS):
        for pos, day in enumerate(p):
            m[day * D + pos, k] = 1
    return m


def solve(targets, totals=None, upper=None, rng_seed=0):
    """Integer counts x[s][k] >= 0 with placement(x[s]) == targets[s] and sum_s x[s] == totals."""
    place = placement_matrix()
    s_count, k_count = len(targets), len(PERMS)
    n = s_count * k_count
    rows, lo, hi = [], [], []
    for s, target in enumerate(targets):
        block = np.zeros((D * D, n))
        block[:, s * k_count:(s + 1) * k_count] = place
        rows.append(block)
        flat = np.array(target, dtype=float).reshape(-1)
        lo.append(flat)
        hi.append(flat)
    if totals is not None:
        block = np.zeros((k_count, n))
        for s in range(s_count):
            block[:, s * k_count:(s + 1) * k_count] = np.eye(k_count)
        rows.append(block)
        lo.append(np.array(totals, dtype=float))
        hi.append(np.array(totals, dtype=float))
    constraint = LinearConstraint(np.vstack(rows), np.concatenate(lo), np.concatenate(hi))
    ub = np.full(n, np.inf) if upper is None else np.tile(upper, s_count)
    # Random objective spreads the counts instead of piling them on few patterns.
    cost = np.random.default_rng(rng_seed).uniform(0.0, 1.0, n)
    res = milp(cost, constraints=constraint, integrality=np.ones(n),
               bounds=(np.zeros(n), ub))
    if not res.success:
        raise SystemExit(f"infeasible: {res.message}")
    x = np.rint(res.x).astype(int)
    return [x[s * k_count:(s + 1) * k_count] for s in range(s_count)]


def emit_returns(week_patterns, rng):
    out = []
    for k in week_patterns:
        digits = PERMS[k]
        levels = np.sort(rng.normal(0.0003, 0.0095, D))
        while np.any(np.diff(np.round(levels, 8)) <= 0):
            levels = np.sort(rng.normal(0.0003, 0.0095, D))
        week = [0.0] * D
        for pos, day in enumerate(digits):
            week[day] = levels[pos]
        out.extend(week)
    return out


def weekdays(start, count):
    day = start
    while count:
        if day.weekday() < 5:
            yield day
            count -= 1
        day += dt.timedelta(days=1)


def write_csv(path, returns, with_dates):
    with open(path, "w") as fh:
        if with_dates:
            fh.write("date,return\n")
            for d, r in zip(weekdays(dt.date(1966, 1, 3), len(returns)), returns):
                fh.write(f"{d.isoformat()},{r:.8f}\n")
        else:
            fh.write("return\n")
            for r in returns:
                fh.write(f"{r:.8f}\n")


def expand(counts, rng):
    weeks = np.repeat(np.arange(len(PERMS)), counts)
    rng.shuffle(weeks)
    return weeks


def main():
    root = pathlib.Path(__file__).resolve().parents[2]
    data = root / "tests" / "data"
    data.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(19660103)

    totals = [PATTERN_COUNTS[name] for name in NAMES]
    first_four = solve(SUBPERIODS[:4], totals=totals, rng_seed=1)

    # Keep 42013 the unique minimum (7) and 03421/04312 the only maxima (34).
    upper = np.array([33 - c for c in totals], dtype=float)
    for name in ("42013", "03421", "04312"):
        upper[NAMES.index(name)] = 0
    (last,) = solve([SUBPERIODS[4]], upper=upper, rng_seed=2)

    weeks = np.concatenate([expand(c, rng) for c in first_four + [last]])
    write_csv(data / "nyse_returns_fixture.csv", emit_returns(weeks, rng), with_dates=True)

    (shuffled,) = solve([SHUFFLED], rng_seed=3)
    write_csv(data / "nyse_shuffled_fixture.csv",
              emit_returns(expand(shuffled, rng), rng), with_dates=False)

    whole = np.array(totals) + last
    print("whole-period min", whole.min(), [NAMES[i] for i in np.flatnonzero(whole == whole.min())])
    print("whole-period max", whole.max(), [NAMES[i] for i in np.flatnonzero(whole == whole.max())])


if __name__ == "__main__":
    main()
