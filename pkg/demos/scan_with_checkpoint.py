"""
Scanning a range of k with a checkpoint
=======================================

Interrupt a scan halfway, resume it, and compare with a run that was never
interrupted.
"""

import tempfile
from pathlib import Path

from carmseq.scanner import ScanConfig, read_findings, run_scan

work = Path(tempfile.mkdtemp())
full = work / "full.jsonl"
part = work / "part.jsonl"

run_scan(ScanConfig(3, 999, 64, output_path=str(full)))

cfg = ScanConfig(3, 999, 64, output_path=str(part), checkpoint_path=str(work / "scan.ckpt"))
first = run_scan(cfg, stop_after=200)
print("first leg stopped after k =", first.k_completed_through)
second = run_scan(cfg)
print("resumed after k =", second.resumed_from, "and found", len(second.findings), "more")

print("same bytes as uninterrupted run:", full.read_bytes() == part.read_bytes())
for f in read_findings(part):
    print(f"  {f.k}*2^{f.n}+1 = {f.N}  primes {[x['p'] for x in f.factors]}")
