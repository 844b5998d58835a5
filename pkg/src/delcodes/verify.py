"""Ground-truth verification: combinatorial audits, decoder round trips,
and a seeded Monte Carlo simulator.

The combinatorial check uses the defining property of a correcting code
directly: no two distinct codewords, corrupted by any patterns in the
family, may collide on the same received word.  Received words are
compared as exact symbol sequences, so differing lengths or erasure
positions make them distinct.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import far, rep, vt
from .errors import BudgetExceeded, DecodeFailure
from .patterns import (ErrorPattern, PatternFamily, apply_pattern,
                       enumerate_family, family_size, sample_pattern)
from .words import Word, word_to_str

DEFAULT_BUDGET = 10_000_000

_MASK64 = (1 << 64) - 1


def mix64(seed: int, i: int) -> int:
    """SplitMix64-style mixing of (seed, counter) into a 64-bit value."""
    z = (seed + (i + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class VtCodeAdapter:
    kind = "vt"

    def __init__(self, params: vt.VtParams):
        self.params = params
        self._codewords = vt.vt_enumerate(params)

    @property
    def codeword_count(self) -> int:
        return len(self._codewords)

    def codeword(self, index: int) -> Word:
        return self._codewords[index]

    def codewords(self) -> Iterable[Word]:
        return iter(self._codewords)

    def decode(self, received: Word) -> Tuple[Word, bool]:
        return vt.correct_single(self.params, received)

    def describe(self) -> dict:
        return {"code": "vt", "n": self.params.n, "a": self.params.a}


class RepCodeAdapter:
    kind = "rep"

    def __init__(self, params: rep.RepParams):
        self.params = params

    @property
    def codeword_count(self) -> int:
        return 2 ** self.params.m

    def codeword(self, index: int) -> Word:
        m = self.params.m
        info = tuple((index >> (m - 1 - i)) & 1 for i in range(m))
        return rep.rep_encode(self.params, info)

    def codewords(self) -> Iterable[Word]:
        return (self.codeword(i) for i in range(self.codeword_count))

    def decode(self, received: Word) -> Tuple[Word, bool]:
        info, tied = rep.rep_decode(self.params, received)
        return rep.rep_encode(self.params, info), tied

    def describe(self) -> dict:
        return {"code": "rep", "n": self.params.n, "t": self.params.t}


class FarCodeAdapter:
    kind = "far"

    def __init__(self, params: far.FarParams):
        self.params = params

    @property
    def codeword_count(self) -> int:
        return self.params.codeword_count

    def codeword(self, index: int) -> Word:
        return far.far_codeword(self.params, index)

    def codewords(self) -> Iterable[Word]:
        return (self.codeword(i) for i in range(self.codeword_count))

    def decode(self, received: Word) -> Tuple[Word, bool]:
        estimate, info = far.far_decode(self.params, received)
        return estimate, info.ambiguous_flips > 0

    def describe(self) -> dict:
        return {"code": "far", "n": self.params.n, "P": self.params.P}


def make_code(kind: str, **kwargs):
    if kind == "vt":
        return VtCodeAdapter(vt.VtParams(kwargs["n"], kwargs["a"]))
    if kind == "rep":
        return RepCodeAdapter(rep.RepParams(kwargs["n"], kwargs["t"]))
    if kind == "burst":
        return RepCodeAdapter(rep.burst_params(kwargs["n"], kwargs["b"]))
    if kind == "far":
        return FarCodeAdapter(far.far_params(kwargs["n"], kwargs["P"]))
    raise ValueError(f"unknown code kind {kind!r}")


@dataclass
class VerifyReport:
    mode: str  # combinatorial | roundtrip | montecarlo
    codebook_size: int
    result: str  # pass | fail
    family_size: Optional[int] = None
    trial_count: Optional[int] = None
    cases: Optional[int] = None
    failures: int = 0
    ambiguity_count: int = 0
    seed: Optional[int] = None
    counterexample: Optional[dict] = None
    counterexamples: List[dict] = field(default_factory=list)
    config: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.result == "pass"

    def to_json_dict(self) -> dict:
        out = {
            "mode": self.mode,
            "codebookSize": self.codebook_size,
            "result": self.result,
            "failures": self.failures,
            "ambiguityCount": self.ambiguity_count,
            "config": self.config,
        }
        if self.family_size is not None:
            out["familySize"] = self.family_size
        if self.trial_count is not None:
            out["trialCount"] = self.trial_count
        if self.cases is not None:
            out["cases"] = self.cases
        if self.seed is not None:
            out["seed"] = self.seed
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.counterexamples:
            out["counterexamples"] = self.counterexamples
        return out


def _collision_witness(x1: Word, g1: ErrorPattern,
                       x2: Word, g2: ErrorPattern, received: Word) -> dict:
    return {
        "x1": word_to_str(x1), "g1": g1.to_json_dict(),
        "x2": word_to_str(x2), "g2": g2.to_json_dict(),
        "received": word_to_str(received),
    }


def verify_combinatorial(codebook: Sequence[Word], family: PatternFamily,
                         budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Check that corrupted-output sets are disjoint across codewords."""
    fam_size = family_size(family)
    if len(codebook) * fam_size > budget:
        raise BudgetExceeded(
            f"{len(codebook)} x {fam_size} evaluations exceed budget {budget}")
    patterns = list(enumerate_family(family, max_patterns=budget))
    seen: Dict[Word, Tuple[int, ErrorPattern]] = {}
    report = VerifyReport(
        mode="combinatorial", codebook_size=len(codebook),
        family_size=fam_size, result="pass",
        config={"family": family.describe()})
    for ci, x in enumerate(codebook):
        for g in patterns:
            received = apply_pattern(x, g)
            prior = seen.get(received)
            if prior is None:
                seen[received] = (ci, g)
            elif prior[0] != ci:
                report.result = "fail"
                report.failures += 1
                witness = _collision_witness(
                    codebook[prior[0]], prior[1], x, g, received)
                if report.counterexample is None:
                    report.counterexample = witness
                if len(report.counterexamples) < 10:
                    report.counterexamples.append(witness)
    return report


def _roundtrip_witness(x: Word, g: ErrorPattern,
                       estimate: Optional[Word], error: Optional[str]) -> dict:
    out = {"x": word_to_str(x), "g": g.to_json_dict()}
    out["estimate"] = word_to_str(estimate) if estimate is not None else None
    if error is not None:
        out["error"] = error
    return out


def verify_roundtrip(code, family: PatternFamily,
                     budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Decode every (codeword, pattern) corruption and compare exactly."""
    fam_size = family_size(family)
    total = code.codeword_count * fam_size
    if total > budget:
        raise BudgetExceeded(f"{total} evaluations exceed budget {budget}")
    patterns = list(enumerate_family(family, max_patterns=budget))
    report = VerifyReport(
        mode="roundtrip", codebook_size=code.codeword_count,
        family_size=fam_size, result="pass", cases=0,
        config={"family": family.describe(), **code.describe()})
    for x in code.codewords():
        for g in patterns:
            report.cases += 1
            received = apply_pattern(x, g)
            estimate, error = None, None
            try:
                estimate, flagged = code.decode(received)
                report.ambiguity_count += int(flagged)
            except DecodeFailure as exc:
                error = str(exc)
            if estimate != x:
                report.result = "fail"
                report.failures += 1
                witness = _roundtrip_witness(x, g, estimate, error)
                if report.counterexample is None:
                    report.counterexample = witness
                if len(report.counterexamples) < 10:
                    report.counterexamples.append(witness)
    return report


def _run_trials(code, family: PatternFamily, seed: int,
                start: int, stop: int) -> Tuple[int, int, List[Tuple[int, dict]]]:
    successes = 0
    ambiguities = 0
    failures: List[Tuple[int, dict]] = []
    for i in range(start, stop):
        rng = random.Random(mix64(seed, i))
        x = code.codeword(rng.randrange(code.codeword_count))
        g = sample_pattern(family, rng.getrandbits(63))
        received = apply_pattern(x, g)
        estimate, error = None, None
        try:
            estimate, flagged = code.decode(received)
            ambiguities += int(flagged)
        except DecodeFailure as exc:
            error = str(exc)
        if estimate == x:
            successes += 1
        else:
            witness = _roundtrip_witness(x, g, estimate, error)
            witness["trial"] = i
            failures.append((i, witness))
    return successes, ambiguities, failures


def simulate(code, family: PatternFamily, trials: int, seed: int,
             workers: int = 1) -> VerifyReport:
    """Monte Carlo round trips with per-trial derived seeds.

    The result is identical for any worker count: trial i depends only on
    mix64(seed, i), and shard results are merged in trial order.
    """
    if trials < 1:
        raise ValueError("need trials >= 1")
    shards = [(k * trials // workers, (k + 1) * trials // workers)
              for k in range(max(1, workers))]
    shards = [(a, b) for a, b in shards if a < b]
    if len(shards) == 1:
        results = [_run_trials(code, family, seed, *shards[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(shards)) as pool:
            futures = [pool.submit(_run_trials, code, family, seed, a, b)
                       for a, b in shards]
            results = [f.result() for f in futures]
    successes = sum(r[0] for r in results)
    ambiguities = sum(r[1] for r in results)
    failures = sorted((w for r in results for w in r[2]), key=lambda t: t[0])
    report = VerifyReport(
        mode="montecarlo", codebook_size=code.codeword_count,
        trial_count=trials, seed=seed,
        result="pass" if successes == trials else "fail",
        failures=trials - successes, ambiguity_count=ambiguities,
        config={"family": family.describe(), **code.describe()})
    if failures:
        report.counterexample = failures[0][1]
        report.counterexamples = [w for _, w in failures[:10]]
    return report
