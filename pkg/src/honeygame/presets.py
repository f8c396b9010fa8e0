"""Built-in exploit catalog and node layouts for the bundled case study."""

from __future__ import annotations

from .graph import Exploit

DEFAULT_HONEYPOT_COST = 7.0
DEFAULT_ITERATIONS = 1000
DEFAULT_SEED = 7
DEFAULT_MIN_EXPLOITS = 1
DEFAULT_MAX_EXPLOITS = 4

DEFAULT_CATALOG: tuple[Exploit, ...] = (
    Exploit("Phishing", 0.7, 3.0),
    Exploit("Malware", 0.4, 5.0),
    Exploit("Ransomware", 0.3, 8.0),
    Exploit("Social Engineering", 0.8, 4.0),
    Exploit("SQL Injection", 0.6, 7.0),
    Exploit("Cryptography", 0.2, 10.0),
)

NODE_LAYOUTS: dict[str, tuple[tuple[str, float], ...]] = {
    "2nodes": (("A", 30.0), ("B", 20.0)),
    "3nodes": (("A", 25.0), ("B", 15.0), ("C", 10.0)),
    "4nodes": (("A", 20.0), ("B", 15.0), ("C", 10.0), ("D", 5.0)),
}
