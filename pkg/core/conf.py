from django.conf import settings

DEFAULTS = {
    'ENUMERATION_BOUND': 4096,
    'WINDOW_VERTEX_BUDGET': 1_000_000,
    'FINITE_PATH_BOUND': 256,
    'COVERAGE_BOUND': 100_000,
    'SEARCH_NODE_BUDGET': 200_000,
    'MAX_PERIOD_MULTIPLE': 6,
    'DEFAULT_RADIUS': 12,
    'DEFAULT_INNER_RADIUS': 10,
    'RECURSION_DEPTH_LIMIT': 32,
}


def budget(name):
    """Read one GQD_HAMILTON setting, falling back to the built-in default."""
    configured = getattr(settings, 'GQD_HAMILTON', {}) if settings.configured else {}
    return configured.get(name, DEFAULTS[name])
