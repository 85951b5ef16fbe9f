"""Range scans for Carmichael numbers k*2**n + 1.

Output is JSONL, one finding per line, keys sorted::

    {"N": "1729", "factors": [{"class": "Generic", "d": 1, "m": 1, "p": "7"}, ...],
     "k": 27, "n": 6, "proven_primality": true, "wall_time_ms": null}

N and p are decimal strings; d, m, k, n are ints.  wall_time_ms stays null
unless timings are requested, so runs with any worker count produce
byte-identical files.

The checkpoint is a JSON object
``{"config": {...}, "config_hash": str, "k_completed_through": int, "timestamp": float}``
replaced atomically (temp file + rename).  Findings for k up to
k_completed_through are already flushed to the output file.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterator

from .arith import nu2, small_primes
from .korselt import certify
from .sieve import residues_for_prime
from .special import SequenceTarget

log = logging.getLogger(__name__)

WORKERS_ENV = "CARMSEQ_WORKERS"
DEFAULT_SIEVE_PRIMES = 25
CHECKPOINT_INTERVAL = 1.0  # seconds between checkpoint writes


class ScanError(RuntimeError):
    pass


class CheckpointMismatch(ScanError):
    def __init__(self, diff: dict[str, tuple]):
        self.diff = diff
        lines = [f"  {k}: checkpoint={a!r} requested={b!r}" for k, (a, b) in sorted(diff.items())]
        super().__init__("checkpoint was written by a different configuration:\n" + "\n".join(lines))


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            w = int(env)
        except ValueError:
            raise ScanError(f"{WORKERS_ENV}={env!r} is not an integer") from None
        if w < 1:
            raise ScanError(f"{WORKERS_ENV} must be >= 1, got {w}")
        return w
    return os.cpu_count() or 1


@dataclass(frozen=True)
class ScanConfig:
    k_min: int
    k_max: int
    n_max: int
    sieve_primes: int = DEFAULT_SIEVE_PRIMES
    workers: int = 1
    checkpoint_path: str | None = None
    output_path: str | None = None
    emit_certificates: bool = False

    def __post_init__(self):
        if self.k_min % 2 == 0 or self.k_max % 2 == 0:
            raise ValueError(f"k_min and k_max must be odd, got {self.k_min}, {self.k_max}")
        if not 1 <= self.k_min <= self.k_max:
            raise ValueError(f"need 1 <= k_min <= k_max, got {self.k_min}, {self.k_max}")
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.sieve_primes < 0:
            raise ValueError(f"sieve_primes must be >= 0, got {self.sieve_primes}")

    def identity(self) -> dict:
        """Fields a resumed run must share with the checkpointed one."""
        return {"k_min": self.k_min, "k_max": self.k_max, "n_max": self.n_max,
                "sieve_primes": self.sieve_primes}

    def config_hash(self) -> str:
        blob = json.dumps(self.identity(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()


@dataclass(frozen=True)
class Finding:
    k: int
    n: int
    N: str
    factors: tuple[dict, ...]
    proven_primality: bool
    wall_time_ms: float | None = None

    def to_json(self) -> str:
        d = asdict(self)
        d["factors"] = list(self.factors)
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "Finding":
        d = json.loads(line)
        d["factors"] = tuple(d["factors"])
        return cls(**d)


# -- per-k work ----------------------------------------------------------------

def sieve_exclusions(k: int, n_max: int, sieve_primes: int) -> set[int]:
    """n in [1, n_max] for which k*2**n + 1 cannot be Carmichael because it has
    a small prime factor p whose p - 1 is not d*2**m with d | k and m <= n."""
    out: set[int] = set()
    odd = [p for p in small_primes(10**4) if p > 2][:sieve_primes]
    for p in odd:
        if k % p == 0:
            continue
        cc = residues_for_prime(p, k)
        if not cc.residues:
            continue
        m = nu2(p - 1)
        d = (p - 1) >> m
        bad_below = n_max + 1 if k % d else m  # exclude n < bad_below in the class
        for n in range(cc.residue or cc.modulus, min(bad_below, n_max + 1), cc.modulus):
            out.add(n)
    return out


def scan_k(k: int, n_max: int, sieve_primes: int = DEFAULT_SIEVE_PRIMES, timings: bool = False) -> list[Finding]:
    skip = sieve_exclusions(k, n_max, sieve_primes) if sieve_primes else set()
    found = []
    for n in range(1, n_max + 1):
        if n in skip:
            continue
        t0 = time.perf_counter()
        N = (k << n) + 1
        if pow(2, N - 1, N) != 1:  # every Carmichael number is a base-2 pseudoprime
            continue
        cert = certify(SequenceTarget(k, n, allow_unit=(k == 1)))
        if not cert.is_carmichael:
            continue
        ms = round((time.perf_counter() - t0) * 1000, 3) if timings else None
        facs = tuple({"p": str(f.p), "d": f.d, "m": f.m, "class": f.cls.value} for f in cert.factors)
        found.append(Finding(k, n, str(cert.target.N), facs, cert.proven, ms))
    return found


def _task(args: tuple) -> tuple[int, list[Finding] | None, str | None]:
    k = args[0]
    try:
        return k, scan_k(*args), None
    except Exception as exc:  # isolate the failure to this k
        return k, None, f"{type(exc).__name__}: {exc}"


# -- persistence ---------------------------------------------------------------

def _atomic_write(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_checkpoint(path: str | os.PathLike, config: ScanConfig, k_done: int) -> None:
    state = {
        "config": config.identity(),
        "config_hash": config.config_hash(),
        "k_completed_through": k_done,
        "timestamp": time.time(),
    }
    _atomic_write(Path(path), json.dumps(state, sort_keys=True, indent=1) + "\n")


def read_checkpoint(path: str | os.PathLike) -> dict | None:
    p = Path(path)
    if not p.exists():
        return None
    with p.open() as fh:
        return json.load(fh)


def read_findings(path: str | os.PathLike) -> list[Finding]:
    with open(path) as fh:
        return [Finding.from_json(line) for line in fh if line.strip()]


def _check_writable(path: str | None) -> None:
    if path is None:
        return
    parent = Path(path).resolve().parent
    if not parent.is_dir():
        raise ScanError(f"directory for {path} does not exist")
    try:
        with tempfile.TemporaryFile(dir=parent):
            pass
    except OSError as exc:
        raise ScanError(f"cannot write next to {path}: {exc}") from None
    if Path(path).exists() and not os.access(path, os.W_OK):
        raise ScanError(f"{path} is not writable")


def _resume_point(config: ScanConfig) -> int | None:
    """k_completed_through from a matching checkpoint, or None for a fresh run."""
    if config.checkpoint_path is None:
        return None
    state = read_checkpoint(config.checkpoint_path)
    if state is None:
        return None
    if state.get("config_hash") != config.config_hash():
        old = state.get("config", {})
        new = config.identity()
        diff = {k: (old.get(k), new[k]) for k in new if old.get(k) != new[k]}
        raise CheckpointMismatch(diff or {"config_hash": (state.get("config_hash"), config.config_hash())})
    return int(state["k_completed_through"])


# -- the scan ------------------------------------------------------------------

@dataclass
class ScanSummary:
    findings: list[Finding] = field(default_factory=list)
    k_completed_through: int | None = None
    failed: dict[int, str] = field(default_factory=dict)
    resumed_from: int | None = None
    stopped_early: bool = False


def scan(config: ScanConfig, timings: bool = False, stop_after: int | None = None) -> Iterator[Finding]:
    """Yield findings in (k, n) order.  See :func:`run_scan` for the summary."""
    summary = ScanSummary()
    yield from _scan(config, summary, timings, stop_after)


def run_scan(config: ScanConfig, timings: bool = False, stop_after: int | None = None) -> ScanSummary:
    """Run the scan to completion and return every finding of this run.

    ``stop_after`` stops after that many k values have been processed (used
    to simulate an interruption).
    """
    summary = ScanSummary()
    for f in _scan(config, summary, timings, stop_after):
        summary.findings.append(f)
    return summary


def _scan(config: ScanConfig, summary: ScanSummary, timings: bool, stop_after: int | None) -> Iterator[Finding]:
    _check_writable(config.output_path)
    _check_writable(config.checkpoint_path)
    done = _resume_point(config)
    summary.resumed_from = done
    start = config.k_min if done is None else done + 2

    out = cert_out = None
    if config.output_path is not None:
        if done is None:
            out = open(config.output_path, "w")
        else:
            # drop anything written past the checkpoint; it gets recomputed
            keep = []
            if Path(config.output_path).exists():
                keep = [f for f in read_findings(config.output_path) if f.k <= done]
            _atomic_write(Path(config.output_path), "".join(f.to_json() + "\n" for f in keep))
            out = open(config.output_path, "a")
        if config.emit_certificates:
            cert_out = open(config.output_path + ".certs.txt", "w" if done is None else "a")

    ks = list(range(start, config.k_max + 1, 2))
    if stop_after is not None and stop_after < len(ks):
        ks = ks[:stop_after]
        summary.stopped_early = True
    args = [(k, config.n_max, config.sieve_primes, timings) for k in ks]

    pool = None
    if config.workers > 1 and len(args) > 1:
        pool = ProcessPoolExecutor(max_workers=config.workers)
        results = pool.map(_task, args, chunksize=max(1, len(args) // (config.workers * 8)))
    else:
        results = map(_task, args)

    contiguous = done
    last_ckpt = time.monotonic()
    try:
        for k, found, err in results:
            if err is not None:
                log.error("k=%d failed: %s", k, err)
                summary.failed[k] = err
                continue
            for f in found:
                if out is not None:
                    out.write(f.to_json() + "\n")
                if cert_out is not None:
                    cert_out.write(certify(SequenceTarget(f.k, f.n, allow_unit=(f.k == 1))).to_text() + "\n")
                yield f
            if not summary.failed:
                contiguous = k
            if config.checkpoint_path and time.monotonic() - last_ckpt >= CHECKPOINT_INTERVAL:
                _flush(out, cert_out)
                if contiguous is not None:
                    write_checkpoint(config.checkpoint_path, config, contiguous)
                last_ckpt = time.monotonic()
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
        _flush(out, cert_out)
        if config.checkpoint_path and contiguous is not None:
            write_checkpoint(config.checkpoint_path, config, contiguous)
        for fh in (out, cert_out):
            if fh is not None:
                fh.close()
    summary.k_completed_through = contiguous


def _flush(*handles) -> None:
    for fh in handles:
        if fh is not None:
            fh.flush()
            os.fsync(fh.fileno())
