from hypothesis import settings

# kernel warm-up (numba compilation) can make a first example look slow;
# wall-clock deadlines add nothing here but flakiness
settings.register_profile("sojourn", deadline=None)
settings.load_profile("sojourn")
