"""Connectoids: abstract connectivity, normal trees and their relatives."""


class ConnectoidError(RuntimeError):
    def __init__(self, message, kind="MalformedInput"):
        super().__init__(message)
        self.kind = kind


from ._core import Connectoid, run as _run, validate_family, verbs  # noqa: E402

__all__ = [
    "Connectoid",
    "ConnectoidError",
    "Result",
    "build_normal_tree",
    "build_partition_tree",
    "csn_order_from_tree",
    "end_shadows",
    "probe_dispersed",
    "run",
    "td_from_tree",
    "tree_from_td",
    "validate_family",
    "verbs",
    "verify_ccn_order",
    "verify_csn_order",
    "verify_necklace",
    "verify_normal_tree",
    "verify_partition_tree",
    "verify_td",
]

OK, NEGATIVE, INCONCLUSIVE, MALFORMED = 0, 1, 2, 3


class Result:
    """Exit code, JSON report and DOT text of one verb."""

    def __init__(self, code, report, dot):
        self.code = code
        self.report = report
        self.dot = dot

    @property
    def ok(self):
        return self.code == OK

    def __getitem__(self, key):
        return self.report[key]

    def __repr__(self):
        return f"Result(code={self.code}, report={self.report!r})"


def run(verb, instance, artifact=None, **options):
    """Runs a verb on an instance (dict, JSON path or fixture name)."""
    if "lambda" in options:
        options["lambda_"] = options.pop("lambda")
    return Result(*_run(verb, instance, artifact, options))


def _built(verb, instance, artifact, key, **options):
    result = run(verb, instance, artifact, **options)
    if result.code != OK:
        error = result.report.get("error", {})
        raise ConnectoidError(error.get("message", f"{verb} failed"), error.get("kind", "ConstructionFailed"))
    return result.report[key]


def build_normal_tree(instance, root=None, target="all", **options):
    if root is not None:
        options["root"] = root
    return _built("nst-build", instance, None, "tree", target=target, **options)


def verify_normal_tree(instance, tree, **options):
    return run("nst-verify", instance, {"tree": tree}, **options)


def td_from_tree(instance, tree):
    return _built("td-from-nst", instance, {"tree": tree}, "td")


def tree_from_td(instance, td, **options):
    return _built("td-to-nst", instance, {"td": td}, "tree", **options)


def verify_td(instance, td):
    return run("td-verify", instance, {"td": td})


def csn_order_from_tree(instance, tree):
    return _built("csn-from-nst", instance, {"tree": tree}, "witness")


def verify_csn_order(instance, witness, **options):
    return run("csn-verify", instance, {"witness": witness}, **options)


def verify_ccn_order(instance, witness):
    return run("ccn-verify", instance, {"witness": witness})


def build_partition_tree(instance, order=None):
    artifact = None if order is None else {"witness": {"sequence": list(order)}}
    return _built("npt-build", instance, artifact, "partition_tree")


def verify_partition_tree(instance, partition_tree):
    return run("npt-verify", instance, {"partition_tree": partition_tree})


def end_shadows(instance, separator, depth=10, **options):
    return run("ends-shadows", instance, sep=list(separator), depth=depth, **options)


def verify_necklace(instance, beads):
    return run("necklace-verify", instance, {"necklace": {"beads": beads}})


def probe_dispersed(instance, target="all", hits=10, **options):
    return run("disperse-probe", instance, target=target, hits=hits, **options)
