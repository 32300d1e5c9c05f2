from hypothesis import HealthCheck, settings

# Exhaustive algebra on larger n can be slow per example; wall-clock
# deadlines just make the suite flaky under load.
settings.register_profile(
    "kleinforge",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("kleinforge")
