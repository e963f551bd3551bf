"""
Reconstruction harness tests

Tests following the same philosophy throughout:
- Deterministic behavior with seeded generators and concrete backends
- Brute-force oracles instead of stored expected outputs
- No mocks - only in-memory backends and small stand-in methods
"""
