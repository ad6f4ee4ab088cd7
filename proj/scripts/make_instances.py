#!/usr/bin/env python3
"""Regenerate the bundled CB-CTT instance fixtures under data/instances/.

The real ITC-2007 track-3 files are not redistributable, so the repository
ships synthetic stand-ins. Each fixture reproduces the published dimension
tuple of the corresponding competition instance (courses, lectures, rooms,
periods per day, days, curricula) and uses the same .ctt grammar, so the
real files can be dropped in as replacements at any time.

Every fixture is grown around a hidden feasible timetable: curricula and
shared teachers are only formed between courses that never share a period
in that witness, and unavailability is only declared where the witness has
no lecture. The witness therefore stays a valid solution of the emitted
instance, which guarantees solvability. Output is deterministic.
"""

import random
import sys
from pathlib import Path

# name, courses, lectures, rooms, periods per day, days, curricula
DIMENSIONS = [
    ("comp01", 30, 160, 6, 6, 5, 14),
    ("comp02", 82, 283, 16, 5, 5, 70),
    ("comp03", 72, 251, 16, 5, 5, 68),
    ("comp04", 79, 286, 18, 5, 5, 57),
    ("comp05", 54, 152, 9, 6, 6, 139),
    ("comp06", 108, 361, 18, 5, 5, 70),
    ("comp07", 131, 434, 20, 5, 5, 77),
    ("comp08", 86, 324, 18, 5, 5, 61),
    ("comp09", 76, 279, 18, 5, 5, 75),
    ("comp10", 115, 370, 18, 5, 5, 67),
    ("comp11", 30, 162, 5, 9, 5, 13),
    ("comp12", 88, 218, 11, 6, 6, 150),
    ("comp13", 82, 308, 19, 5, 5, 66),
    ("comp14", 85, 275, 17, 5, 5, 60),
    ("comp15", 72, 251, 16, 5, 5, 68),
    ("comp16", 108, 366, 20, 5, 5, 71),
    ("comp17", 99, 339, 17, 5, 5, 70),
    ("comp18", 47, 138, 9, 6, 6, 52),
    ("comp19", 74, 277, 16, 5, 5, 66),
    ("comp20", 121, 390, 19, 5, 5, 78),
    ("comp21", 94, 327, 18, 5, 5, 78),
]


def split_lectures(rng, courses, total, cap):
    counts = [1] * courses
    remaining = total - courses
    while remaining > 0:
        i = rng.randrange(courses)
        if counts[i] < cap:
            counts[i] += 1
            remaining -= 1
    return counts


def build_witness(rng, lectures, periods, rooms):
    """Assign each course a set of distinct periods, at most `rooms` courses
    per period. Returns per-course period sets, or None on a dead end."""
    load = [0] * periods
    witness = [set() for _ in lectures]
    order = sorted(range(len(lectures)), key=lambda c: (-lectures[c], rng.random()))
    for c in order:
        for _ in range(lectures[c]):
            candidates = [p for p in range(periods)
                          if load[p] < rooms and p not in witness[c]]
            if not candidates:
                return None
            low = min(load[p] for p in candidates)
            near = [p for p in candidates if load[p] <= low + 1]
            p = rng.choice(near)
            witness[c].add(p)
            load[p] += 1
    return witness


def disjoint(witness, group):
    seen = set()
    for c in group:
        if witness[c] & seen:
            return False
        seen |= witness[c]
    return True


def make_teachers(rng, witness, courses):
    teachers = [f"t{c:03d}" for c in range(courses)]
    groups = {t: [c] for c, t in enumerate(teachers)}
    merges = max(1, courses // 8)
    for _ in range(merges * 4):
        if merges == 0:
            break
        a, b = rng.randrange(courses), rng.randrange(courses)
        if teachers[a] == teachers[b]:
            continue
        if disjoint(witness, groups[teachers[a]] + groups[teachers[b]]):
            old = teachers[b]
            for c in groups.pop(old):
                teachers[c] = teachers[a]
                groups[teachers[a]].append(c)
            merges -= 1
    return teachers


def make_curricula(rng, witness, courses, wanted):
    curricula = []
    taken = set()
    attempts = 0
    while len(curricula) < wanted:
        attempts += 1
        if attempts > wanted * 4000:
            raise RuntimeError("curriculum sampling stalled")
        size = rng.choices([2, 3, 4], weights=[45, 40, 15])[0]
        size = min(size, courses)
        group = tuple(sorted(rng.sample(range(courses), size)))
        if group in taken:
            continue
        if not disjoint(witness, group):
            continue
        taken.add(group)
        curricula.append(group)
    return curricula


def make_unavailability(rng, witness, courses, periods):
    target = round(0.05 * courses * periods)
    per_course_cap = max(1, int(0.3 * periods))
    candidates = [(c, p) for c in range(courses) for p in range(periods)
                  if p not in witness[c]]
    rng.shuffle(candidates)
    picked = []
    used = [0] * courses
    for c, p in candidates:
        if len(picked) >= target:
            break
        if used[c] >= per_course_cap:
            continue
        used[c] += 1
        picked.append((c, p))
    picked.sort()
    return picked


def emit(name, C, L, R, P, D, Q, rng):
    periods = D * P
    assert L <= periods * R, name
    lect_cap = min(periods, 8)
    for attempt in range(200):
        lectures = split_lectures(rng, C, L, lect_cap)
        witness = build_witness(rng, lectures, periods, R)
        if witness is not None:
            break
    else:
        raise RuntimeError(f"{name}: no witness found")

    teachers = make_teachers(rng, witness, C)
    curricula = make_curricula(rng, witness, C, Q)
    unavail = make_unavailability(rng, witness, C, periods)

    # Witness sanity: the hidden timetable must satisfy every hard constraint.
    for p in range(periods):
        assert sum(1 for c in range(C) if p in witness[c]) <= R
    for group in curricula:
        assert disjoint(witness, group)
    by_teacher = {}
    for c, t in enumerate(teachers):
        by_teacher.setdefault(t, []).append(c)
    for group in by_teacher.values():
        assert disjoint(witness, group)
    for c, p in unavail:
        assert p not in witness[c]

    students = [rng.randrange(15, 181) for _ in range(C)]
    capacities = sorted((rng.randrange(30, 251) for _ in range(R)), reverse=True)
    min_days = [rng.randint(1, min(D, lectures[c], 4)) for c in range(C)]

    out = []
    out.append(f"Name: {name}")
    out.append(f"Courses: {C}")
    out.append(f"Rooms: {R}")
    out.append(f"Days: {D}")
    out.append(f"Periods_per_day: {P}")
    out.append(f"Curricula: {Q}")
    out.append(f"Constraints: {len(unavail)}")
    out.append("")
    out.append("COURSES:")
    for c in range(C):
        out.append(f"c{c + 1:04d} {teachers[c]} {lectures[c]} {min_days[c]} {students[c]}")
    out.append("")
    out.append("ROOMS:")
    for r in range(R):
        out.append(f"R{r + 1} {capacities[r]}")
    out.append("")
    out.append("CURRICULA:")
    for q, group in enumerate(curricula):
        names = " ".join(f"c{c + 1:04d}" for c in group)
        out.append(f"q{q + 1:03d} {len(group)} {names}")
    out.append("")
    out.append("UNAVAILABILITY_CONSTRAINTS:")
    for c, p in unavail:
        out.append(f"c{c + 1:04d} {p // P} {p % P}")
    out.append("")
    out.append("END.")
    out.append("")
    return "\n".join(out)


def main():
    out_dir = Path(__file__).resolve().parent.parent / "data" / "instances"
    out_dir.mkdir(parents=True, exist_ok=True)
    for row in DIMENSIONS:
        name = row[0]
        rng = random.Random(f"cbctt-fixture-{name}")
        text = emit(*row, rng)
        (out_dir / f"{name}.ctt").write_text(text)
        print(f"wrote {name}.ctt")
    return 0


if __name__ == "__main__":
    sys.exit(main())
