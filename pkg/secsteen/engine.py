######################################################################
# secsteen: https://github.com/secsteen/secsteen
#
# Copyright: 2024
#
# secsteen is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#
# secsteen is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with secsteen. If not, see <http://www.gnu.org/licenses/>.
######################################################################

"""
The SecondaryEngine class: configuration, logging, parallelism, the
verification suites and report formatting for the command-line tool.
"""

__author__ = "The secsteen developers"

__all__ = ["SecondaryEngine"]

import concurrent.futures as _futures
import csv as _csv
import inspect as _inspect
import io as _io
import json as _json
import os as _os
import sys as _sys

import yaml as _yaml

from loguru import logger as _logger

from sympy import isprime as _isprime

from . import bp as _bp
from . import d0 as _d0
from . import d1 as _d1
from . import massey as _massey
from . import parser as _parser
from . import secondary as _secondary
from . import steenrod as _steenrod
from . import _series
from ._exceptions import DegreeBoundError as _DegreeBoundError
from ._exceptions import SecondaryAlgebraError as _SecondaryAlgebraError


def _check(name, ok, detail=""):
    return {"check": name, "ok": bool(ok), "detail": str(detail)}


def _run_pair(args):
    # Module level so that process pools can pickle it.
    function, item = args
    return function(*item)


class SecondaryEngine:
    """
    Front end to the secondary Steenrod algebra computations.
    """

    # Supported output formats.
    _supported_formats = ["text", "markdown", "csv", "json"]

    # Keys accepted in a configuration file.
    _config_keys = [
        "prime",
        "max_degree",
        "bp_bound",
        "jobs",
        "ring",
        "format",
        "log_level",
        "log_file",
    ]

    def __init__(
        self,
        prime=3,
        max_degree=20,
        bp_bound=3,
        jobs=1,
        ring="D0",
        format="text",
        log_level="ERROR",
        log_file=None,
        save_settings=False,
    ):
        """
        Constructor

        prime: int
            The odd prime used by the EBP computations.

        max_degree: int
            The largest internal degree of any table or verification sweep.

        bp_bound: int
            The largest index n of the EBP generators.

        jobs: int
            The number of worker processes. 1 computes serially.

        ring: str
            The ring used for expressions whose atoms all lie in A. One of
            "A", "D0" and "E0".

        format: str
            The report format: "text", "markdown", "csv" or "json".

        log_level: str
            The logging level to use. Options are "TRACE", "DEBUG", "INFO",
            "WARNING", "ERROR", and "CRITICAL".

        log_file: str
            The name of the file to which log messages are written.

        save_settings: bool
            Whether to write a YAML file containing the settings used to
            initialise the engine.
        """

        # Validate input.

        # First handle the logger.

        if log_level is None:
            log_level = "ERROR"
        else:
            if not isinstance(log_level, str):
                raise TypeError("'log_level' must be of type 'str'")

            # Delete whitespace and convert to upper case.
            log_level = log_level.upper().replace(" ", "")

            if not log_level in _logger._core.levels.keys():
                raise ValueError(
                    f"Unsupported logging level '{log_level}'. Options are: {', '.join(_logger._core.levels.keys())}"
                )
        self._log_level = log_level

        if log_file is not None:
            if not isinstance(log_file, str):
                raise TypeError("'log_file' must be of type 'str'")

            # Try to create the directory.
            dirname = _os.path.dirname(log_file)
            if dirname != "":
                try:
                    _os.makedirs(dirname, exist_ok=True)
                except:
                    raise IOError(f"Unable to create directory for log file: {log_file}")
            self._log_file = _os.path.abspath(log_file)
        else:
            self._log_file = _sys.stderr

        # Update the logger.
        _logger.remove()
        _logger.add(self._log_file, level=self._log_level)

        for name, value in (("prime", prime), ("max_degree", max_degree), ("bp_bound", bp_bound)):
            if not isinstance(value, int) or isinstance(value, bool):
                msg = f"'{name}' must be of type 'int'"
                _logger.error(msg)
                raise TypeError(msg)
        if not _isprime(prime):
            msg = f"'prime' must be a prime number, got {prime}"
            _logger.error(msg)
            raise ValueError(msg)
        if max_degree < 0:
            msg = f"'max_degree' must be non-negative, got {max_degree}"
            _logger.error(msg)
            raise ValueError(msg)
        if bp_bound < 1:
            msg = f"'bp_bound' must be positive, got {bp_bound}"
            _logger.error(msg)
            raise ValueError(msg)
        if bp_bound > 3:
            _logger.warning(f"'bp_bound' = {bp_bound} makes the EBP expansions very large")
        self._prime = prime
        self._max_degree = max_degree
        self._bp_bound = bp_bound

        if jobs is None:
            jobs = 1
        if not isinstance(jobs, int) or isinstance(jobs, bool):
            msg = "'jobs' must be of type 'int'"
            _logger.error(msg)
            raise TypeError(msg)
        if jobs < 1:
            msg = f"'jobs' must be at least 1, got {jobs}"
            _logger.error(msg)
            raise ValueError(msg)
        self._jobs = jobs

        if not isinstance(ring, str):
            msg = "'ring' must be of type 'str'"
            _logger.error(msg)
            raise TypeError(msg)
        ring = ring.upper().replace(" ", "")
        if ring not in ("A", "D0", "E0"):
            msg = f"Unsupported default ring '{ring}'. Options are: A, D0, E0"
            _logger.error(msg)
            raise ValueError(msg)
        self._ring = ring

        if not isinstance(format, str):
            msg = "'format' must be of type 'str'"
            _logger.error(msg)
            raise TypeError(msg)
        format = format.lower().replace(" ", "")
        if format not in self._supported_formats:
            msg = f"Unsupported format '{format}'. Options are: {', '.join(self._supported_formats)}"
            _logger.error(msg)
            raise ValueError(msg)
        self._format = format

        if not isinstance(save_settings, bool):
            msg = "'save_settings' must be of type 'bool'"
            _logger.error(msg)
            raise TypeError(msg)

        # Store the settings as a dictionary.
        self._settings = {
            "prime": self._prime,
            "max_degree": self._max_degree,
            "bp_bound": self._bp_bound,
            "jobs": self._jobs,
            "ring": self._ring,
            "format": self._format,
            "log_level": self._log_level,
            "log_file": log_file,
        }

        # Write to a YAML file.
        if save_settings:
            with open("secsteen_settings.yaml", "w") as f:
                _yaml.dump(self._settings, f)

        self._suites = {
            "intro": self._suite_intro,
            "massey": self._suite_massey,
            "corollary": self._suite_corollary,
            "adem": self._suite_adem,
            "operators": self._suite_operators,
            "L": self._suite_L,
            "d0": self._suite_d0,
            "d1": self._suite_d1,
            "star": self._suite_star,
            "theta": self._suite_theta,
            "phi": self._suite_phi,
            "series": self._suite_series,
            "bp": self._suite_bp,
        }

    @classmethod
    def from_config(cls, config=None, **overrides):
        """
        Create an engine from a YAML configuration file. Keyword arguments
        that are not None override the values read from the file.

        Parameters
        ----------

        config: str
            Path to the configuration file.

        Returns
        -------

        engine: SecondaryEngine
        """
        settings = {}
        if config is not None:
            if not isinstance(config, str):
                msg = "'config' must be of type 'str'"
                _logger.error(msg)
                raise TypeError(msg)
            if not _os.path.isfile(config):
                msg = f"Unable to locate configuration file: '{config}'"
                _logger.error(msg)
                raise IOError(msg)
            with open(config, "r") as f:
                try:
                    settings = _yaml.safe_load(f) or {}
                except _yaml.YAMLError as e:
                    msg = f"Unable to parse configuration file '{config}': {e}"
                    _logger.error(msg)
                    raise ValueError(msg)
            if not isinstance(settings, dict):
                msg = f"Configuration file '{config}' must hold a mapping"
                _logger.error(msg)
                raise ValueError(msg)
            unknown = set(settings) - set(cls._config_keys)
            if unknown:
                msg = f"Unknown configuration keys: {', '.join(sorted(unknown))}"
                _logger.error(msg)
                raise ValueError(msg)
        save_settings = overrides.pop("save_settings", False)
        for key, value in overrides.items():
            if key not in cls._config_keys:
                msg = f"Unknown setting '{key}'"
                _logger.error(msg)
                raise ValueError(msg)
            if value is not None:
                settings[key] = value
        return cls(save_settings=save_settings, **settings)

    @property
    def settings(self):
        return dict(self._settings)

    def _map(self, function, items):
        """Evaluate function(*item) for each item, in order."""
        items = list(items)
        if self._jobs == 1 or len(items) < 2:
            return [function(*item) for item in items]
        with _futures.ProcessPoolExecutor(max_workers=self._jobs) as executor:
            return list(executor.map(_run_pair, [(function, item) for item in items]))

    def _check_degree(self, needed, what):
        if needed > self._max_degree:
            msg = f"{what} needs degree {needed}, above the bound {self._max_degree}"
            _logger.error(msg)
            raise _DegreeBoundError(msg)

    def _resolve_ring(self, expr, ring):
        if ring is not None:
            return ring.upper()
        inferred = _parser.infer_ring(expr)
        return self._ring if inferred == "A" else inferred

    def evaluate(self, text, ring=None):
        """
        Evaluate an expression.

        Parameters
        ----------

        text: str
            The expression.

        ring: str
            "A", "D0", "D1" or "E0". By default the ring is inferred from the
            atoms, with expressions over A evaluated in the default ring.

        Returns
        -------

        doc: secsteen.parser.ElementDoc
        """
        expr = _parser.parse(text)
        ring = self._resolve_ring(expr, ring)
        value = _parser.evaluate(expr, ring)
        degrees = value.degrees()
        if degrees:
            self._check_degree(max(degrees), f"'{text}'")
        return _parser.ElementDoc.from_element(value, f"eval {text}")

    def multiply(self, left, right, ring=None):
        """
        The product of two expressions. In D_1 one factor must lie in A.

        Returns
        -------

        doc: secsteen.parser.ElementDoc
        """
        expr_x = _parser.parse(left)
        expr_y = _parser.parse(right)
        rings = {_parser.infer_ring(expr_x), _parser.infer_ring(expr_y)}
        if ring is None and "D1" in rings:
            x = _parser.evaluate(expr_x, _parser.infer_ring(expr_x))
            y = _parser.evaluate(expr_y, _parser.infer_ring(expr_y))
            if isinstance(x, _steenrod.AElt) and isinstance(y, _d1.D1Elt):
                value = _d1.left_act(x, y)
            elif isinstance(x, _d1.D1Elt) and isinstance(y, _steenrod.AElt):
                value = _d1.right_act(x, y)
            else:
                msg = "A product in D_1 needs exactly one factor in A"
                _logger.error(msg)
                raise ValueError(msg)
        else:
            if ring is None:
                order = ["A", "D0", "E0"]
                resolved = [self._resolve_ring(e, None) for e in (expr_x, expr_y)]
                ring = max(resolved, key=order.index)
            value = _parser.evaluate(expr_x, ring) * _parser.evaluate(expr_y, ring)
        return _parser.ElementDoc.from_element(value, f"mul {left} * {right}")

    def adem_table(self, max_sum):
        """
        The rows [n, m], n + m <= max_sum, of the table of Adem relations
        in E_0, each with its definition, D_0 column and X + μ_0X column.
        """
        if not isinstance(max_sum, int) or max_sum < 2:
            msg = f"'max_sum' must be an integer >= 2, got {max_sum!r}"
            _logger.error(msg)
            raise ValueError(msg)
        self._check_degree(max_sum, "The Adem table")
        rows = self._map(_secondary.adem_row, _secondary.adem_pairs(max_sum))
        return [
            {
                "pair": f"[{row['pair'][0]},{row['pair'][1]}]",
                "definition": row["definition"],
                "D0": str(row["d0"]),
                "X + u0 X": str(row["w"]),
            }
            for row in rows
        ]

    def massey(self, a, b, c):
        """
        <a, b, c> for expressions over A.

        Returns
        -------

        doc: secsteen.parser.ElementDoc
        """
        values = [_parser.evaluate(text, "A") for text in (a, b, c)]
        needed = sum(max(v.degrees(), default=0) for v in values)
        self._check_degree(needed, "The Massey product")
        result = _massey.triple_massey(*values)
        return _parser.ElementDoc.from_element(result.value, f"massey <{a}, {b}, {c}>")

    def corollary(self, t_max):
        """The table of <P_t^s, P_t^s, P_t^s> for t <= t_max."""
        executor = None
        if self._jobs > 1:
            executor = _futures.ProcessPoolExecutor(max_workers=self._jobs)
        try:
            entries = _massey.corollary_sweep(t_max, self._max_degree, executor)
        finally:
            if executor is not None:
                executor.shutdown()
        rows = []
        for entry in entries:
            row = {
                "t": entry["t"],
                "s": entry["s"],
                "value": str(entry["value"]),
                "degree": entry["degree"],
                "expected": entry["expected"],
                "ok": entry["ok"],
            }
            if "literal" in entry:
                row["expected"] = (
                    f"literal {entry['literal']} (degree {entry['literal_degree']}), "
                    f"consistent {entry['consistent']} (degree {entry['consistent_degree']})"
                )
            rows.append(row)
        return rows

    @staticmethod
    def operations():
        """Every public operation with its module and signature."""
        rows = []
        for module in (
            _steenrod,
            _d0,
            _d1,
            _massey,
            _secondary,
            _series,
            _bp,
            _parser,
        ):
            for name in module.__all__:
                obj = getattr(module, name)
                if _inspect.isclass(obj):
                    for method in sorted(vars(obj)):
                        member = getattr(obj, method)
                        if method.startswith("_") or not callable(member):
                            continue
                        rows.append(
                            {
                                "operation": f"{name}.{method}",
                                "module": module.__name__,
                                "signature": str(_inspect.signature(member)),
                            }
                        )
                elif callable(obj):
                    rows.append(
                        {
                            "operation": name,
                            "module": module.__name__,
                            "signature": str(_inspect.signature(obj)),
                        }
                    )
        return rows

    def verify(self, suite="all"):
        """
        Run a verification suite.

        Parameters
        ----------

        suite: str
            One of the names in 'suites()', or "all".

        Returns
        -------

        checks: list of dict
            One record per check with keys 'check', 'ok' and 'detail'.
        """
        if suite == "all":
            names = list(self._suites)
        elif suite in self._suites:
            names = [suite]
        else:
            msg = f"Unknown suite '{suite}'. Options are: all, {', '.join(self._suites)}"
            _logger.error(msg)
            raise ValueError(msg)

        checks = []
        for name in names:
            _logger.info(f"Running suite '{name}'")
            try:
                results = self._suites[name]()
            except _SecondaryAlgebraError as e:
                results = [_check(f"{name}: completed", False, e)]
            for result in results:
                result["check"] = f"{name}: {result['check']}"
            checks.extend(results)
        return checks

    def suites(self):
        return list(self._suites)

    def _suite_intro(self):
        # Fixed identities, checked whatever the degree bound.
        checks = []
        s1 = _d0.d0_sq(1)
        value = s1 * s1
        expected = _d0.d0_sq(2, coeff=2) + _d0.d0_y(-1, 0)
        checks.append(_check("Sq1 Sq1", value == expected, value))
        y = _d0.d0_y(-1, 0)
        value = s1 * y
        expected = y * s1 + _d0.d0_sq(0, 1, coeff=2)
        checks.append(_check("Sq1 Y_{-1,0}", value == expected, value))
        q0 = _d0.sigma(_steenrod.q_element(0))
        for k in range(1, 5):
            qk = _d0.sigma(_steenrod.q_element(k))
            R = _steenrod.seq_add(_steenrod.delta(1), _steenrod.delta(k + 1))
            expected = _d0.d0_sq(*R) + _d0.d0_y(-1, k)
            checks.append(_check(f"Q{k} Q0", qk * q0 == expected, qk * q0))
            checks.append(_check(f"Q0 Q{k}", q0 * qk == _d0.d0_sq(*R), q0 * qk))
            checks.append(_check(f"[Q0, Q{k}]", q0 * qk - qk * q0 == _d0.d0_y(-1, k)))
        for t in range(1, 5):
            for s in range(t):
                p = _steenrod.p_element(t, s)
                value = _d0.sigma(p) * _d0.sigma(p)
                expected = _d0.sigma(_steenrod.p_element(t, s + 1)).scale(2)
                if s + 1 == t:
                    R = _steenrod.seq_scale(_steenrod.delta(t), (1 << s) - 1)
                    expected = expected + _d0.d0_y(t - 2, 2 * s, R)
                checks.append(_check(f"P_{t}^{s} P_{t}^{s}", value == expected, value))
        return checks

    def _suite_massey(self):
        a = _steenrod.Sq(0, 2)
        self._check_degree(3 * a.degree(), "The flagship Massey product")
        tau = _massey.tau(a, a)
        expected_tau = _d1.mu0(_steenrod.Sq(0, 4)) + _d1.normalize_u(0, 2, (0, 1))
        value = _massey.triple_massey(a, a, a).value
        return [
            _check("tau(Sq(0,2), Sq(0,2))", tau == expected_tau, tau),
            _check("<Sq(0,2), Sq(0,2), Sq(0,2)>", value == _steenrod.Sq(0, 1, 2), value),
        ]

    def _suite_corollary(self):
        # Every P_t^s with t <= 3, whatever the degree bound.
        checks = []
        for entry in _massey.corollary_sweep(3):
            name = f"<P_{entry['t']}^{entry['s']}>^3"
            checks.append(_check(name, entry["ok"], entry["value"]))
        return checks

    def _suite_adem(self):
        max_sum = min(7, self._max_degree)
        checks = []
        for n, m in _secondary.adem_pairs(max_sum):
            r = _secondary.adem_element(n, m)
            direct = _d0.D0Elt()
            for (R, S), _ in _secondary.adem_tensor(n, m).items():
                direct = direct + _d0.d0_sq(*R) * _d0.d0_sq(*S)
            checks.append(_check(f"[{n},{m}] D_0 column", r.d_part() == direct, r))
            checks.append(_check(f"[{n},{m}] in E_0", _secondary.in_E0(r)))
            checks.append(_check(f"[{n},{m}] is a relation", not _d0.pi(r.d_part())))
        return checks

    def _suite_operators(self):
        self._check_degree(5, "The operator suite")
        q0, q1 = _steenrod.q_element(0), _steenrod.q_element(1)
        r32 = _secondary.adem_element(3, 2)
        r22 = _secondary.adem_element(2, 2) * _secondary.ehat(1)
        expected = _steenrod.TensorAA.from_factors(q1, q0) + _steenrod.TensorAA.from_factors(q0, q1)
        s32 = _secondary.S(r32)
        s22 = _secondary.S(r22)
        return [
            _check("S([3,2])", s32 == expected, s32),
            _check("S([2,2]Sq1)", not s22, s22),
            _check("rho([3,2]) = rho([2,2]Sq1)", _secondary.rho(r32) == _secondary.rho(r22)),
        ]

    def _suite_L(self):
        checks = []
        for n, m in _secondary.adem_pairs(min(10, self._max_degree)):
            left = _secondary.L(_secondary.adem_element(n, m))
            right = _secondary.L_R(_secondary.adem_tensor(n, m))
            checks.append(_check(f"L([{n},{m}])", left == right, left))
        return checks

    def _suite_d0(self):
        bound = min(16, self._max_degree)
        checks = []
        for d in range(bound + 1):
            ok = True
            for e in range(d + 1):
                for R in _steenrod.milnor_basis(e):
                    for S in _steenrod.milnor_basis(d - e):
                        a, b = _steenrod.AElt({R: 1}), _steenrod.AElt({S: 1})
                        product = _d0.pi(_d0.sigma(a) * _d0.sigma(b))
                        ok = ok and product == _steenrod.milnor_product_matrix(a, b)
            checks.append(_check(f"pi(sigma(a)sigma(b)) = ab in degree {d}", ok))
            _logger.debug(f"D_0 oracle in degree {d}: {ok}")
        for d in range(bound + 1):
            ok = True
            for e in range(d + 1):
                left = _d0.relation_basis(e)
                right = _d0.relation_basis(d - e)
                for k1 in left:
                    for k2 in right:
                        x = _d0.D0Elt({k1: 2 if k1[0] == "Sq" else 1})
                        y = _d0.D0Elt({k2: 2 if k2[0] == "Sq" else 1})
                        ok = ok and not (x * y)
            checks.append(_check(f"R_D R_D = 0 in degree {d}", ok))
        return checks

    def _suite_d1(self):
        checks = []
        for d in range(self._max_degree + 1):
            report = _d1.exactness_ranks(d)
            checks.append(_check(f"exactness in degree {d}", report["exact"], report))
        return checks

    def _suite_star(self):
        bound = min(16, self._max_degree)
        checks = []
        for d in range(bound + 1):
            ok = True
            for e1 in range(d + 1):
                for e2 in range(d - e1 + 1):
                    for k1 in _secondary.ehat_basis(e1):
                        x = _secondary.EHatElt({k1: 1})
                        for k2 in _secondary.ehat_basis(e2):
                            y = _secondary.EHatElt({k2: 1})
                            xy = x * y
                            for k3 in _secondary.ehat_basis(d - e1 - e2):
                                z = _secondary.EHatElt({k3: 1})
                                ok = ok and (xy * z == x * (y * z))
            checks.append(_check(f"associativity in degree {d}", ok))
        return checks

    def _suite_theta(self):
        bound = min(16, self._max_degree)
        checks = []
        for d in range(bound + 1):
            derivation = True
            closed = True
            for e in range(d + 1):
                for k1 in _secondary.ehat_basis(e):
                    if k1[0] not in ("Sq", "Y"):
                        continue
                    for k2 in _secondary.ehat_basis(d - e):
                        if k2[0] not in ("Sq", "Y"):
                            continue
                        x, y = _d0.D0Elt({k1: 1}), _d0.D0Elt({k2: 1})
                        left = _secondary.theta_hat_D(x * y)
                        right = _secondary.v_right_act(
                            _secondary.theta_hat_D(x), _d0.pi(y)
                        ) + _secondary.v_left_act(_d0.pi(x), _secondary.theta_hat_D(y))
                        derivation = derivation and left == right
                        if k1[0] == "Sq" and k2[0] == "Sq":
                            product = _secondary.EHatElt({k1: 1}) * _secondary.EHatElt({k2: 1})
                            closed = closed and _secondary.in_E0(product)
            checks.append(_check(f"theta_hat_D derivation in degree {d}", derivation))
            checks.append(_check(f"E_0 closed under products in degree {d}", closed))
        return checks

    def _suite_phi(self):
        bound = min(10, self._max_degree)
        relations = [_secondary.ehat(1, coeff=2), _secondary.ehat(2, coeff=2)]
        for l in range(3):
            relations.append(_secondary.x_gen(-1, l) + _secondary.EHatElt.from_d0(_d0.d0_y(-1, l)))
            for k in range(3):
                relations.append(_secondary.x_gen(k, l))
                relations.append(_secondary.mu0_x_gen(k, l))
                if k < l:
                    relations.append(_secondary.EHatElt.from_d0(_d0.d0_y(k, l)))
        relations.extend(_secondary.adem_element(n, m) for n, m in _secondary.adem_pairs(5))
        checks = []
        for d in range(1, bound + 1):
            ok = True
            for R in _steenrod.milnor_basis(d):
                a = _steenrod.AElt({R: 1})
                for r in relations:
                    defect = _secondary.linearity_defect_Phi(a, r)
                    ok = ok and defect == _secondary.phi_closed_form(a, r)
            checks.append(_check(f"Phi = Delta op + op# Delta for |a| = {d}", ok))
        return checks

    def _suite_series(self):
        ring = _series.Z4Ring("a b c", "e")
        a, b, c, e = ring["a"], ring["b"], ring["c"], ring["e"]
        order = 7
        f = _series.TruncatedSeries(ring, {1: 1, 2: a, 3: 2 * c, 4: b, 6: 2 * a}, order)
        g = _series.TruncatedSeries(ring, {1: 1, 2: b, 4: a, 5: 2 * b}, order)
        composite = f.compose(g)
        _, theta, _ = _series.series_decompose(composite)
        law = _series.theta_of_composite(f, g)
        f_pair = _series.PairSeries(f, {(1, 1): e})
        g_pair = _series.PairSeries(g, {(2, 1): e})
        effective = f_pair.compose(g_pair).effective()
        return [
            _check("theta of a composite", theta == law, law),
            _check("(fg)^eff = f^eff g^eff", effective == f_pair.effective().compose(g_pair.effective())),
        ]

    def bp_check(self, prime=None, bound=None):
        """
        The congruences of EBP_*EBP and, for odd primes, the homology
        dimensions up to the largest degree allowed by the bound.
        """
        prime = self._prime if prime is None else prime
        bound = self._bp_bound if bound is None else bound
        algebroid = _bp.EBPAlgebroid(prime, bound)
        checks = []
        for n in range(1, bound + 1):
            value = algebroid.v_congruence_defect(n)
            checks.append(_check(f"v_{n} = p m_{n} mod I^2", value >= 2, value))
            defects = algebroid.structure_defects(n)
            for name, value in defects.items():
                checks.append(_check(f"{name} congruence, n = {n}", value >= 2, value))
            strict = algebroid.structure_defects(n, strict_w=True)["eta_w"]
            checks.append(
                _check(
                    f"eta_w with k < n, n = {n}",
                    strict == 1 and defects["eta_w"] >= 2,
                    f"valuation {strict}, short by w_{n}",
                )
            )
            if prime == 2:
                _, defect = algebroid.p2_failure_witness(n)
                checks.append(
                    _check(f"d tau_{n} = t_1 (sum v_i t_j^(2^i))^2 mod I^3", defect >= 3, defect)
                )
            else:
                value = algebroid.tau_boundary_valuation(n)
                checks.append(_check(f"d tau_{n} = 0 mod I^3", value >= 3, value))
        if prime != 2:
            top = min(self._max_degree, 2 * (prime ** (bound + 1) - 1) - 2)
            executor = None
            if self._jobs > 1:
                executor = _futures.ProcessPoolExecutor(max_workers=self._jobs)
            try:
                reports = algebroid.homology_dimensions(top, executor)
            finally:
                if executor is not None:
                    executor.shutdown()
            for report in reports:
                checks.append(
                    _check(
                        f"homology in degree {report['degree']}",
                        report["ok"],
                        f"{report['dimension']} (expected {report['expected']})",
                    )
                )
        return checks

    def _suite_bp(self):
        return self.bp_check(self._prime, min(self._bp_bound, 2))

    def format_rows(self, rows, format=None):
        """
        Render a list of records as text, markdown, csv or json.
        """
        format = self._format if format is None else format
        if format not in self._supported_formats:
            msg = f"Unsupported format '{format}'. Options are: {', '.join(self._supported_formats)}"
            _logger.error(msg)
            raise ValueError(msg)
        if format == "json":
            return _json.dumps(rows, indent=2, default=str)
        if not rows:
            return ""
        columns = list(rows[0])
        cells = [[str(row.get(c, "")) for c in columns] for row in rows]
        if format == "csv":
            buffer = _io.StringIO()
            writer = _csv.writer(buffer, lineterminator="\n")
            writer.writerow(columns)
            writer.writerows(cells)
            return buffer.getvalue().rstrip("\n")
        if format == "markdown":
            lines = ["| " + " | ".join(columns) + " |"]
            lines.append("|" + "|".join("---" for _ in columns) + "|")
            lines.extend("| " + " | ".join(row) + " |" for row in cells)
            return "\n".join(lines)
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(columns)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
        lines.extend("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells)
        return "\n".join(lines)

    def format_element(self, doc, format=None):
        """Render an ElementDoc."""
        format = self._format if format is None else format
        if format == "json":
            return doc.to_json()
        element = doc.to_element()
        if format == "text":
            return _parser.format_element(element)
        rows = [
            {"ring": doc.ring, "degree": doc.degree, "element": _parser.format_element(element)}
        ]
        return self.format_rows(rows, format)
