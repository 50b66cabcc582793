from typing import Any, Mapping


class Accessor:
    """
    Read-only dotted access to a nested mapping of setting values.

    .. code-block:: py

        limits = current().limits
        limits.aut_universe      # 8
    """
    _attrs: Mapping[str, Any]

    def __init__(self, attrs: Mapping[str, Any]):
        """
        Nested dicts become nested Accessors.
        """
        values = {}
        for k, v in attrs.items():
            if isinstance(v, dict):
                v = Accessor(v)
            values[k] = v
        object.__setattr__(self, "_attrs", values)

    def __getattr__(self, name: str) -> Any:
        if name.startswith("__") or name == "_attrs":
            raise AttributeError(name)
        try:
            return self._attrs[name]
        except KeyError:
            raise AttributeError(name) from None

    def __setattr__(self, name: str, value: Any):
        raise AttributeError("Accessor is read only; change the Settings.")

    def __repr__(self) -> str:
        return f"Accessor({self._as_dict()})"

    def _as_dict(self) -> Mapping[str, Any]:
        ret = {}
        for k, v in self._attrs.items():
            if isinstance(v, Accessor):
                v = v._as_dict()
            ret[k] = v

        return ret
