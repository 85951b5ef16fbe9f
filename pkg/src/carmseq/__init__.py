"""Carmichael numbers of the form k*2**n + 1: search, certification,
finite verification for small k, and effective bounds."""
from .arith import factorize, is_prime, jacobi, mult_order, primality
from .bounds import BoundReport, theorem1_report
from .harness import PaperClaim, run_claim_table, theorem2_verdict
from .korselt import CarmichaelCertificate, Reason, brute_is_carmichael, certify
from .lemmas import Check, multdep_factor, partition_products
from .scanner import Finding, ScanConfig, run_scan, scan
from .sieve import CongruenceClass, compatible, qr_allowed_exponents, residues_for_prime
from .special import FactorClass, SequenceTarget, SpecialFactor, special_factorize

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "CarmichaelCertificate", "Check", "CongruenceClass", "FactorClass",
    "Finding", "PaperClaim", "Reason", "ScanConfig", "SequenceTarget", "SpecialFactor",
    "brute_is_carmichael", "certify", "compatible", "factorize", "is_prime", "jacobi",
    "mult_order", "multdep_factor", "partition_products", "primality", "qr_allowed_exponents",
    "residues_for_prime", "run_claim_table", "run_scan", "scan", "special_factorize",
    "theorem1_report", "theorem2_verdict",
]
