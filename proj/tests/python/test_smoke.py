import unbentcollections  # noqa: F401
