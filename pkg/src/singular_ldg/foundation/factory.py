class BaseFactory:
    """Marker for dependency-injected objects that build configured numerical artifacts."""
