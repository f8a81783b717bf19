from hypothesis import settings

settings.register_profile("csl", deadline=None, max_examples=60)
settings.load_profile("csl")
