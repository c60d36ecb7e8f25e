from hypothesis import HealthCheck, settings

# Exact big-rational arithmetic has per-example spikes on slow machines;
# the suites bound their own wall-clock where it matters.
settings.register_profile(
    "exact", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("exact")
