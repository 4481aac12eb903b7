class BaseService:
    """Marker for focused services that own one piece of numerical behavior."""
