"""Chart-based Riemannian geometry verification engine."""

import json as _json

try:
    from . import _rgeom as _core  # installed package layout
except ImportError:  # pragma: no cover - build-tree layout
    import _rgeom as _core

ExprParseError = _core.ExprParseError
DomainError = _core.DomainError
ChartError = _core.ChartError
ManifestError = _core.ManifestError

catalog_names = _core.catalog_names
curvature = _core.curvature
derivative = _core.derivative
evaluate = _core.evaluate


def catalog_manifest(entry):
    """Golden manifest of a catalog entry, as a dict."""
    return _json.loads(_core.catalog_manifest_json(entry))


def check_manifest(manifest):
    """Run the checks of a manifest (dict or path) and return the report dict."""
    if isinstance(manifest, dict):
        return _json.loads(_core.check_manifest_json(_json.dumps(manifest)))
    return _json.loads(_core.check_manifest_file(str(manifest)))


def selftest():
    """Run the golden catalog suite; returns the report dict."""
    return _json.loads(_core.selftest_json())
