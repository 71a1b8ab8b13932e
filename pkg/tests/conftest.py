from hypothesis import settings

# exact integer arithmetic has no meaningful per-example wall clock;
# occasional GC pauses were tripping the default 200ms deadline
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")
