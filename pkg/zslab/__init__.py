"""
zslab - exact zero-sum invariants of finite abelian groups.
"""

SERVICE_NAME = "zslab"
SERVICE_VERSION = "0.3.0"
