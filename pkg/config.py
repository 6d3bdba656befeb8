"""
Runtime defaults, overridable through environment variables.
"""
import os

REVERSING_BUDGET = int(os.environ.get("GARSIDE_REVERSING_BUDGET", 100000))
SATURATION_BUDGET = int(os.environ.get("GARSIDE_SATURATION_BUDGET", 200000))
SEED = int(os.environ.get("GARSIDE_SEED", 20240101))
LOG_LEVEL = os.environ.get("GARSIDE_LOG_LEVEL", "WARNING")

# cells allowed per grid in the diamond checks
DIAMOND_BUDGET = int(os.environ.get("GARSIDE_DIAMOND_BUDGET", 2000))
