from hypothesis import settings

# keep property runs deterministic and bounded; the heavy exhaustive tiers
# live in explicit loops, not in hypothesis
settings.register_profile("ci", max_examples=60, derandomize=True)
settings.load_profile("ci")
