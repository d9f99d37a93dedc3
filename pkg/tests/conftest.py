from hypothesis import settings

# enumeration cost varies a lot between draws
settings.register_profile("weakdual", deadline=None, max_examples=60)
settings.load_profile("weakdual")
