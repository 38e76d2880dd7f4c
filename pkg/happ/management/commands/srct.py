import json

from django.core.management.base import BaseCommand, CommandError

from happ.classes.class_service import ClassService
from happ.classes.count_service import CountService
from happ.classes.expansion_service import ExpansionService
from happ.classes.module_service import ModuleService
from happ.classes.poset_service import PosetService
from happ.classes.tableau_service import TableauService
from happ.classes.verification_service import VerificationService
from happ.combinat.errors import USAGE_REASONS
from happ.combinat.shifted import FAMILIES
from happ.configs.sweep_bounds import SweepBounds

USAGE = 2
VERIFICATION_FAILED = 1

COUNT_CHECKS = ("bijection", "threes_structure", "search")


class Command(BaseCommand):
    help = (
        "Exact combinatorics of standard reverse composition tableaux under the "
        "0-Hecke action: enumeration, expansions, classes, posets, modules, "
        "verification sweeps and count checks."
    )

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="subcommand", required=True, metavar="subcommand")

        def add(name, help_text, formats=("text", "json")):
            sub = subparsers.add_parser(name, help=help_text)
            sub.add_argument("--format", "--out", dest="format", choices=formats, default=formats[0])
            sub.add_argument("--output", dest="output", default=None, help="write to this path instead of stdout")
            return sub

        sub = add("enum", "list SRCT(α)")
        sub.add_argument("--shape", required=True)
        sub.add_argument("--columns-increasing", action="store_true", help="only the canonical class E_α")

        sub = add("skew-enum", "list skew SRCTs of α//β")
        sub.add_argument("--shape", required=True)
        sub.add_argument("--skew", required=True, help="inner shape β")

        sub = add("classes", "equivalence classes with source, sink and DRN set")
        sub.add_argument("--shape", required=True)
        sub.add_argument("--members", action="store_true")

        sub = add("orbit", "flip orbit of a tableau given as 5,4,2/8,7,6,3/...")
        sub.add_argument("--tableau", required=True)

        sub = add("qs", "quasisymmetric Schur expansion in the F basis")
        sub.add_argument("--shape", required=True)

        sub = add("canonical", "canonical expansion, or the transition matrix for --n")
        group = sub.add_mutually_exclusive_group(required=True)
        group.add_argument("--shape")
        group.add_argument("--n", type=int)

        sub = add("skew-qs", "skew quasisymmetric Schur expansion")
        sub.add_argument("--shape", required=True)
        sub.add_argument("--skew", required=True)

        sub = add("poset", "flip posets of the classes or of a skew shape", formats=("text", "json", "dot"))
        sub.add_argument("--shape", required=True)
        sub.add_argument("--skew", default="")
        sub.add_argument("--class", dest="class_index", type=int, default=None)

        sub = add("module", "basis and generator matrices of a 0-Hecke module", formats=("json", "text"))
        sub.add_argument("--shape", required=True)
        sub.add_argument("--skew", default="")
        sub.add_argument("--class", dest="class_index", type=int, default=None)
        sub.add_argument("--verdict", action="store_true", help="indecomposability verdict instead of matrices")
        sub.add_argument("--restrict", type=int, default=None, metavar="M", help="verify the restriction at m")

        sub = add("verify", "run a verification suite", formats=("text", "json", "tsv"))
        sub.add_argument("--suite", required=True, choices=SweepBounds.suite_names())
        sub.add_argument("--n", type=int, default=None)

        sub = add("counts", "closed-form counts against enumeration", formats=("text", "json", "tsv"))
        sub.add_argument("--family", choices=FAMILIES + COUNT_CHECKS, default=None)
        sub.add_argument("--k", type=int, default=None)
        sub.add_argument("--n", type=int, default=None)
        sub.add_argument("--shape", default=None)

        sub = add("conjecture", "rank symmetry and unimodality of every class poset", formats=("text", "json", "tsv"))
        sub.add_argument("--n", type=int, default=None)

    def handle(self, *args, **options):
        subcommand = options["subcommand"]
        handler = getattr(self, "_" + subcommand.replace("-", "_"))
        text = handler(options)
        self._write(text, options)

    def _write(self, text, options):
        if not text.endswith("\n"):
            text += "\n"
        if options.get("output"):
            with open(options["output"], "w") as file:
                file.write(text)
        else:
            self.stdout.write(text, ending="")

    @staticmethod
    def _json(payload):
        return json.dumps(payload, indent=2, ensure_ascii=False)

    def _unwrap(self, result, options):
        """Data of a successful result; otherwise the matching exit code."""
        if result["status"] == "success":
            return result["data"]
        if result["status"] == "error" and result["message"] in USAGE_REASONS:
            raise CommandError(result.get("detail", result["message"]), returncode=USAGE)
        if result["status"] == "error":
            self._fail({"reason": result["message"], "detail": result.get("detail")}, options)
        raise CommandError(result["message"], returncode=VERIFICATION_FAILED)

    def _fail(self, witness, options):
        self._write(self._json(witness), options)
        raise CommandError("verification failed", returncode=VERIFICATION_FAILED)

    def _enum(self, options):
        data = self._unwrap(TableauService.enumerate(options["shape"], options["columns_increasing"]), options)
        if options["format"] == "json":
            return self._json(data)
        return "\n".join(data["tableaux"])

    def _skew_enum(self, options):
        data = self._unwrap(TableauService.enumerate_skew(options["shape"], options["skew"]), options)
        if options["format"] == "json":
            return self._json(data)
        return "\n".join(data["tableaux"])

    def _classes(self, options):
        data = self._unwrap(ClassService.classes(options["shape"], options["members"]), options)
        if options["format"] == "json":
            return self._json(data)
        lines = []
        for row in data["classes"]:
            marker = " canonical" if row["canonical"] else ""
            lines.append(
                f"{row['index']}\tsize={row['size']}\tst={row['st_word']}\tsource={row['source_text']}"
                f"\tsink={row['sink_text']}\tdrn={','.join(str(c) for c in row['drn'])}{marker}"
            )
        return "\n".join(lines)

    def _orbit(self, options):
        data = self._unwrap(TableauService.orbit(options["tableau"]), options)
        if options["format"] == "json":
            return self._json(data)
        return "\n".join(data["orbit"])

    def _expansion(self, result, options):
        data = self._unwrap(result, options)
        if options["format"] == "json":
            return self._json(data["expansion"])
        return "\n".join(data["lines"])

    def _qs(self, options):
        return self._expansion(ExpansionService.quasisymmetric_schur(options["shape"]), options)

    def _canonical(self, options):
        if options["n"] is None:
            return self._expansion(ExpansionService.canonical(options["shape"]), options)
        data = self._unwrap(ExpansionService.transition_matrix(options["n"]), options)
        if not data["upper_unitriangular"]:
            self._fail({"n": data["n"], "reason": "not_upper_unitriangular", "matrix": data["matrix"]}, options)
        if options["format"] == "json":
            return self._json(data)
        lines = []
        for index, row in zip(data["index"], data["matrix"]):
            lines.append(",".join(str(p) for p in index) + "\t" + " ".join(str(v) for v in row))
        return "\n".join(lines)

    def _skew_qs(self, options):
        return self._expansion(ExpansionService.skew(options["shape"], options["skew"]), options)

    def _poset(self, options):
        data = self._unwrap(
            PosetService.poset(options["shape"], options["skew"], options["class_index"]), options
        )
        if options["format"] == "dot":
            return data["dot"]
        if options["format"] == "json":
            return self._json(data["posets"])
        return "\n".join(
            f"{poset['name']}\tsize={len(poset['elements'])}"
            f"\trank_vector={','.join(str(v) for v in poset['rank_vector'])}"
            f"\tlattice={str(poset['lattice']).lower()}"
            for poset in data["posets"]
        )

    def _module(self, options):
        if options["verdict"]:
            data = self._unwrap(ModuleService.verdict(options["shape"]), options)
            if not data["consistent"]:
                self._fail(data, options)
            if options["format"] == "json":
                return self._json(data)
            if data["commutant_dimension"] is None:
                return f"{options['shape']}\t{data['verdict']}\tclasses={data['classes']}"
            return f"{options['shape']}\t{data['verdict']}\tcommutant_dimension={data['commutant_dimension']}"

        if options["restrict"] is not None:
            data = self._unwrap(ModuleService.restriction(options["shape"], options["restrict"]), options)
            if not data["ok"]:
                self._fail(data["witness"], options)
            if options["format"] == "json":
                return self._json(data)
            return f"{data['subject']}\tok\tblocks={self._json(data['details'].get('blocks', {}))}"

        data = self._unwrap(
            ModuleService.module(options["shape"], options["skew"], options["class_index"]), options
        )
        if not data["relations"]["ok"]:
            self._fail(data["relations"]["witness"], options)
        if options["format"] == "json":
            return self._json(data)
        lines = [f"module {data['label']} dimension {data['dimension']}"]
        lines += [f"e{k}\t{text}" for k, text in enumerate(data["basis_text"], start=1)]
        for i, matrix in enumerate(data["generators"], start=1):
            lines.append(f"pi_{i}")
            lines += [" ".join(str(v) for v in row) for row in matrix]
        return "\n".join(lines)

    def _verify(self, options):
        data = self._unwrap(VerificationService.run_suite(options["suite"], options["n"]), options)
        if not data["ok"]:
            self._fail(data["witness"], options)
        if options["format"] == "json":
            return self._json(data)
        rows = VerificationService.report_rows(data["reports"])
        if options["format"] == "tsv":
            return VerificationService.to_tsv(rows)
        lines = [f"ok\t{row['check']}\t{row['subject']}\tchecked={row['checked']}" for row in rows]
        lines.append(f"suite {data['suite']} passed: {data['subjects']} subjects up to n={data['n']}")
        return "\n".join(lines)

    def _counts(self, options):
        family = options["family"]
        if family == "bijection":
            if not options["shape"]:
                raise CommandError("counts --family bijection needs --shape", returncode=USAGE)
            return self._check_result(CountService.bijection(options["shape"]), options)
        if family == "threes_structure":
            if options["k"] is None:
                raise CommandError("counts --family threes_structure needs --k", returncode=USAGE)
            return self._check_result(CountService.threes_structure(options["k"]), options)
        if family == "search":
            if options["n"] is None:
                raise CommandError("counts --family search needs --n", returncode=USAGE)
            data = self._unwrap(CountService.search(options["n"]), options)
            if options["format"] == "json":
                return self._json(data)
            rows = [
                {"shape": row["shape"], "canonical_count": row["canonical_count"], "matches": row["matches"]}
                for row in data["rows"]
            ]
            return VerificationService.to_tsv(rows)

        parameter = {name: options[name] for name in ("k", "n") if options[name] is not None}
        if family and parameter:
            data = self._unwrap(CountService.count(family, **parameter), options)
            rows, witness = [data], None if data["match"] else data
        else:
            table = self._unwrap(CountService.table(family), options)
            rows, witness = table["rows"], table["witness"]
        if witness is not None:
            self._fail(witness, options)

        if options["format"] == "json":
            return self._json(rows[0] if family and parameter else rows)
        flat = [
            {
                "family": row["family"],
                "parameter": ",".join(f"{key}={value}" for key, value in row["parameter"].items()),
                "formula": row["formula"],
                "enumerated": row["enumerated"],
                "match": row["match"],
            }
            for row in rows
        ]
        if options["format"] == "tsv":
            return VerificationService.to_tsv(flat)
        return "\n".join(
            f"{row['family']}\t{row['parameter']}\tformula={row['formula']}"
            f"\tenumerated={row['enumerated']}\tmatch={str(row['match']).lower()}"
            for row in flat
        )

    def _check_result(self, result, options):
        data = self._unwrap(result, options)
        if not data["ok"]:
            self._fail(data["witness"], options)
        if options["format"] == "json":
            return self._json(data)
        return f"ok\t{data['check']}\t{data['subject']}\tchecked={data['checked']}"

    def _conjecture(self, options):
        data = self._unwrap(VerificationService.conjecture(options["n"]), options)
        if not data["ok"]:
            self._fail(data["witness"], options)
        if options["format"] == "json":
            return self._json(data)
        if options["format"] == "tsv":
            return VerificationService.to_tsv(
                data["rows"], columns=["shape", "st_word", "size", "rank_vector", "symmetric", "unimodal"]
            )
        lines = [
            f"{row['shape']}\t{row['st_word']}\t{','.join(str(v) for v in row['rank_vector'])}"
            f"\tsymmetric={str(row['symmetric']).lower()}\tunimodal={str(row['unimodal']).lower()}"
            for row in data["rows"]
        ]
        lines.append(
            f"{data['classes']} classes, {len(data['non_unimodal'])} not unimodal, "
            f"not rank symmetric: {' '.join(data['non_symmetric_shapes']) or 'none'}"
        )
        return "\n".join(lines)
