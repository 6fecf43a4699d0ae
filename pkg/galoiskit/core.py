from __future__ import annotations

import functools

import pluggy

hookimpl = pluggy.HookimplMarker("galoiskit")
"""The hook implementation marker for galoiskit."""


@functools.lru_cache(1)
def get_plugin_manager() -> pluggy.PluginManager:
    pm = pluggy.PluginManager("galoiskit")
    pm.load_setuptools_entrypoints("galoiskit")

    # hook specs
    import galoiskit.hookspecs.irreducibility

    pm.add_hookspecs(galoiskit.hookspecs.irreducibility)

    # hook implementations
    #
    # pluggy calls the most recently registered implementation first, so the
    # cheapest test is registered last
    import galoiskit.irr.eisenstein
    import galoiskit.irr.factor_search
    import galoiskit.irr.rational_roots
    import galoiskit.irr.reduction

    pm.register(galoiskit.irr.factor_search)
    pm.register(galoiskit.irr.reduction)
    pm.register(galoiskit.irr.eisenstein)
    pm.register(galoiskit.irr.rational_roots)

    return pm
