"""Integer polynomials, Hilbert series, squarefree monomial ideals and
graded Betti numbers.

Polynomials are in the single variable λ and all arithmetic goes through
:class:`sympy.Poly` over ``ZZ``. A Hilbert series ``N(λ)/(1 − λ)^d`` is
always kept in lowest terms, so its numerator is the h-polynomial.

Monomial ideals are squarefree; a generator is identified with its support
and stored as a bitmask. Betti numbers and regularity come from Hochster's
formula applied to the Stanley–Reisner complex.
"""

import logging
import typing

from sympy import Poly, Symbol, ZZ
from sympy.polys.polyerrors import ExactQuotientFailed

from . import exceptions, settings
from .homology import FieldSpec, SimplicialComplex, f_vector, reduced_homology_ranks
from .utils import bit, iter_vertices, mask_from_vertices, popcount, vertices_from_mask


logger = logging.getLogger(__name__)

LAMBDA = Symbol("lambda")


class IntegerPolynomial:
	"""An integer polynomial in λ given by its coefficient list.

	``coeffs[i]`` is the coefficient of ``λ**i``; trailing zeros are dropped
	so the zero polynomial has an empty list.
	"""
	__slots__ = ("coeffs",)

	def __init__(self, coeffs=()):
		values = [int(c) for c in coeffs]
		while values and values[-1] == 0:
			values.pop()
		self.coeffs = tuple(values)

	@classmethod
	def from_poly(cls, poly):
		if poly.is_zero:
			return cls()
		return cls(reversed(poly.all_coeffs()))

	@classmethod
	def coerce(cls, value):
		if isinstance(value, cls):
			return value
		if isinstance(value, int):
			return cls((value,))
		return cls(value)

	def to_poly(self):
		return Poly(list(reversed(self.coeffs)) or [0], LAMBDA, domain=ZZ)

	def as_expr(self):
		return self.to_poly().as_expr()

	@property
	def degree(self):
		"""Degree, ``-1`` for the zero polynomial."""
		return len(self.coeffs) - 1

	@property
	def leading(self):
		return self.coeffs[-1] if self.coeffs else 0

	@property
	def is_zero(self):
		return not self.coeffs

	def __getitem__(self, index):
		if 0 <= index < len(self.coeffs):
			return self.coeffs[index]
		return 0

	def __len__(self):
		return len(self.coeffs)

	def __iter__(self):
		return iter(self.coeffs)

	def __call__(self, value):
		result = 0
		for c in reversed(self.coeffs):
			result = result * value + c
		return result

	def __add__(self, other):
		return IntegerPolynomial.from_poly(self.to_poly() + IntegerPolynomial.coerce(other).to_poly())

	__radd__ = __add__

	def __sub__(self, other):
		return IntegerPolynomial.from_poly(self.to_poly() - IntegerPolynomial.coerce(other).to_poly())

	def __rsub__(self, other):
		return IntegerPolynomial.coerce(other) - self

	def __mul__(self, other):
		return IntegerPolynomial.from_poly(self.to_poly() * IntegerPolynomial.coerce(other).to_poly())

	__rmul__ = __mul__

	def __neg__(self):
		return IntegerPolynomial(-c for c in self.coeffs)

	def __pow__(self, exponent):
		return IntegerPolynomial.from_poly(self.to_poly() ** exponent)

	def exquo(self, other):
		"""Exact division.

		Raises
		------
		~graphreg.exceptions.AlgebraError
		"""
		try:
			quotient = self.to_poly().exquo(IntegerPolynomial.coerce(other).to_poly())
		except ExactQuotientFailed as error:
			raise exceptions.AlgebraError(str(error)) from error
		return IntegerPolynomial.from_poly(quotient)

	def __eq__(self, other):
		if isinstance(other, IntegerPolynomial):
			return self.coeffs == other.coeffs
		if isinstance(other, (list, tuple)):
			return self.coeffs == IntegerPolynomial(other).coeffs
		return NotImplemented

	def __hash__(self):
		return hash(self.coeffs)

	def __repr__(self):
		return "IntegerPolynomial({})".format(list(self.coeffs))

	def __str__(self):
		if not self.coeffs:
			return "0"
		terms = []
		for power, c in enumerate(self.coeffs):
			if not c:
				continue
			if power == 0:
				body = str(abs(c))
			else:
				head = "" if abs(c) == 1 else str(abs(c))
				body = head + "λ" + ("" if power == 1 else "^{}".format(power))
			if not terms:
				terms.append(("-" if c < 0 else "") + body)
			else:
				terms.append(("- " if c < 0 else "+ ") + body)
		return " ".join(terms)


ONE = IntegerPolynomial((1,))
LAMBDA_POLY = IntegerPolynomial((0, 1))
ONE_MINUS_LAMBDA = IntegerPolynomial((1, -1))


class HilbertSeries:
	"""A rational function ``numerator / (1 − λ)**dpow`` in lowest terms.

	Factors ``(1 − λ)`` shared by numerator and denominator are cancelled on
	construction, so for quotient rings ``numerator(1) != 0`` and the
	numerator is the h-polynomial.

	Parameters
	----------
	numerator : Union[IntegerPolynomial, Sequence[int]]
		Coefficients of the numerator
	dpow : int
		Exponent of ``(1 − λ)`` in the denominator
	"""
	__slots__ = ("numerator", "dpow")

	def __init__(self, numerator, dpow=0):
		if dpow < 0:
			raise exceptions.AlgebraError("Denominator exponent must be nonnegative, got {}".format(dpow))
		poly = IntegerPolynomial.coerce(numerator).to_poly()
		divisor = ONE_MINUS_LAMBDA.to_poly()
		while dpow > 0 and not poly.is_zero and poly.eval(1) == 0:
			poly = poly.exquo(divisor)
			dpow -= 1
		self.numerator = IntegerPolynomial.from_poly(poly)
		self.dpow = 0 if poly.is_zero else dpow

	@property
	def degree(self):
		"""Degree ``s`` of the numerator."""
		return self.numerator.degree

	def __getitem__(self, index):
		return self.numerator[index]

	def _over(self, dpow):
		return self.numerator * ONE_MINUS_LAMBDA ** (dpow - self.dpow)

	def __add__(self, other):
		d = max(self.dpow, other.dpow)
		return HilbertSeries(self._over(d) + other._over(d), d)

	def __sub__(self, other):
		d = max(self.dpow, other.dpow)
		return HilbertSeries(self._over(d) - other._over(d), d)

	def __mul__(self, other):
		if isinstance(other, HilbertSeries):
			return HilbertSeries(self.numerator * other.numerator, self.dpow + other.dpow)
		return HilbertSeries(self.numerator * IntegerPolynomial.coerce(other), self.dpow)

	__rmul__ = __mul__

	def __eq__(self, other):
		if not isinstance(other, HilbertSeries):
			return NotImplemented
		return self.dpow == other.dpow and self.numerator == other.numerator

	def __hash__(self):
		return hash((self.numerator, self.dpow))

	def to_dict(self):
		return {"h": list(self.numerator.coeffs), "d": self.dpow}

	def __repr__(self):
		return "HilbertSeries({}, {})".format(list(self.numerator.coeffs), self.dpow)

	def __str__(self):
		return "({})/(1 - λ)^{}".format(self.numerator, self.dpow)


def hilbert_series_from_f_vector(f):
	"""Returns ``Σ f[i] λ^i (1 − λ)^(d − i) / (1 − λ)^d`` with ``d = len(f) − 1``.

	Raises
	------
	~graphreg.exceptions.VoidComplex
	"""
	if not f:
		raise exceptions.VoidComplex()
	d = len(f) - 1
	numerator = IntegerPolynomial()
	for i, count in enumerate(f):
		if count:
			numerator = numerator + IntegerPolynomial([0] * i + [count]) * ONE_MINUS_LAMBDA ** (d - i)
	if numerator(1) != f[d] or f[d] == 0:
		raise exceptions.AlgebraError("h(1) = {} does not count the {} top faces".format(numerator(1), f[d]))
	return HilbertSeries(numerator, d)


def hilbert_series_of_complex(complex_):
	"""Returns the Hilbert series of the Stanley–Reisner ring of ``complex_``.

	.. code-block:: python

		>>> str(hilbert_series_of_complex(independence_complex(c5)))
		'(1 + 3λ + λ^2)/(1 - λ)^2'

	Raises
	------
	~graphreg.exceptions.VoidComplex
	"""
	return hilbert_series_from_f_vector(tuple(f_vector(complex_)))


def h_polynomial(series):
	"""Returns the h-polynomial of ``series`` and its degree ``s``."""
	return series.numerator, series.degree


def series_expansion(series, degree):
	"""Returns the Hilbert function values ``0..degree`` of ``series``.

	Raises
	------
	~graphreg.exceptions.InvalidParameter
	"""
	if degree < 0:
		raise exceptions.InvalidParameter("Expansion degree must be nonnegative, got {}".format(degree))
	values = [series.numerator[i] for i in range(degree + 1)]
	# Each factor 1/(1 − λ) turns a coefficient list into its prefix sums
	for _ in range(series.dpow):
		total = 0
		for i, value in enumerate(values):
			total += value
			values[i] = total
	return values


##############################
# Squarefree monomial ideals #
##############################

def _minimalize(masks):
	kept = []
	for mask in sorted(set(masks), key=lambda m: (popcount(m), vertices_from_mask(m))):
		if not any(k & ~mask == 0 for k in kept):
			kept.append(mask)
	return tuple(kept)


class SquarefreeMonomialIdeal:
	"""An ideal of ``K[x_1, …, x_ambient]`` generated by squarefree monomials.

	Generators are given by their supports and reduced to the minimal
	system on construction.

	Raises
	------
	~graphreg.exceptions.InvalidVertex
	~graphreg.exceptions.IdealImproper : a generator has empty support

	Parameters
	----------
	ambient : int
		Number of variables
	generators : Iterable[Iterable[int]]
		Supports of the generating monomials
	"""
	__slots__ = ("ambient", "_gens")

	def __init__(self, ambient, generators=()):
		masks = []
		for support in generators:
			support = list(support)
			for v in support:
				if not (isinstance(v, int) and 1 <= v <= ambient):
					raise exceptions.InvalidVertex(v, ambient)
			masks.append(mask_from_vertices(support))
		self._init(ambient, masks)

	def _init(self, ambient, masks):
		if any(mask == 0 for mask in masks):
			raise exceptions.IdealImproper()
		self.ambient = ambient
		self._gens = _minimalize(masks)

	@classmethod
	def _from_masks(cls, ambient, masks):
		ideal = cls.__new__(cls)
		ideal._init(ambient, list(masks))
		return ideal

	@property
	def generators(self):
		return [vertices_from_mask(g) for g in self._gens]

	@property
	def is_zero(self):
		return not self._gens

	def _check_variable(self, variable):
		if not (isinstance(variable, int) and 1 <= variable <= self.ambient):
			raise exceptions.InvalidVertex(variable, self.ambient)

	def __eq__(self, other):
		if not isinstance(other, SquarefreeMonomialIdeal):
			return NotImplemented
		return self.ambient == other.ambient and self._gens == other._gens

	def __hash__(self):
		return hash((self.ambient, self._gens))

	def __repr__(self):
		return "SquarefreeMonomialIdeal({}, {})".format(self.ambient, [list(g) for g in self.generators])


def stanley_reisner_complex(ideal, max_faces=None):
	"""Returns the complex of supports containing no generator of ``ideal``.

	Raises
	------
	~graphreg.exceptions.CapacityExceeded
	"""
	limit = settings.MAX_FACES if max_faces is None else max_faces
	containing = [[g for g in ideal._gens if g & bit(v)] for v in range(1, ideal.ambient + 1)]
	faces = []
	stack = [(0, 1)]
	while stack:
		face, start = stack.pop()
		faces.append(face)
		if len(faces) > limit:
			raise exceptions.CapacityExceeded(limit, len(faces), "faces")
		for v in range(start, ideal.ambient + 1):
			grown = face | bit(v)
			if all(g & ~grown for g in containing[v - 1]):
				stack.append((grown, v + 1))
	return SimplicialComplex._from_masks(ideal.ambient, faces)


def hilbert_series_of_ideal(ideal):
	"""Returns the Hilbert series of ``R/I`` for ``R`` on ``ideal.ambient``
	variables."""
	return hilbert_series_of_complex(stanley_reisner_complex(ideal))


def colon_by_variable(ideal, variable):
	"""Returns ``I : (x_variable)``.

	Raises
	------
	~graphreg.exceptions.InvalidVertex
	~graphreg.exceptions.VariableAbsent
	~graphreg.exceptions.IdealImproper : ``x_variable`` is itself a generator
	"""
	ideal._check_variable(variable)
	v = bit(variable)
	if not any(g & v for g in ideal._gens):
		raise exceptions.VariableAbsent(variable)
	return SquarefreeMonomialIdeal._from_masks(ideal.ambient, (g & ~v for g in ideal._gens))


def add_variable(ideal, variable):
	"""Returns ``I + (x_variable)``.

	Raises
	------
	~graphreg.exceptions.InvalidVertex
	"""
	ideal._check_variable(variable)
	return SquarefreeMonomialIdeal._from_masks(ideal.ambient, ideal._gens + (bit(variable),))


def ideal_sum_disjoint(first, second):
	"""Returns ``I1 + I2`` after moving ``I2`` onto fresh variables
	``ambient(I1) + 1, …``."""
	shifted = (g << first.ambient for g in second._gens)
	return SquarefreeMonomialIdeal._from_masks(first.ambient + second.ambient, first._gens + tuple(shifted))


################
# Betti tables #
################

class BettiTable:
	"""Graded Betti numbers ``β_{i,j}`` of ``R/I`` for ``i ≥ 1``.

	The entry ``β_{0,0} = 1`` is implied and never stored.
	"""
	__slots__ = ("entries",)

	def __init__(self, entries):
		self.entries = {key: value for key, value in sorted(entries.items()) if value}

	def __getitem__(self, key):
		return self.entries.get(key, 0)

	def regularity(self):
		"""Returns ``max{j − i}`` over the nonzero entries (0 if none)."""
		return max((j - i for i, j in self.entries), default=0)

	def projective_dimension(self):
		return max((i for i, _ in self.entries), default=0)

	def totals(self):
		"""Returns the total Betti numbers ``β_i``, including ``β_0 = 1``."""
		totals = [1] + [0] * self.projective_dimension()
		for (i, _), value in self.entries.items():
			totals[i] += value
		return totals

	def rows(self):
		"""Returns the table in the usual layout.

		Row ``r`` lists ``β_{i, i + r}`` for ``i = 0 … pd``.
		"""
		width = self.projective_dimension() + 1
		table = []
		for r in range(self.regularity() + 1):
			row = [self[(i, i + r)] for i in range(width)]
			if r == 0:
				row[0] = 1
			table.append(row)
		return table

	def to_dict(self):
		return {"entries": [[i, j, value] for (i, j), value in self.entries.items()]}

	def __eq__(self, other):
		if not isinstance(other, BettiTable):
			return NotImplemented
		return self.entries == other.entries

	def __repr__(self):
		return "BettiTable({})".format(self.entries)


def graded_betti(ideal, field=None):
	"""Returns the graded Betti numbers of ``R/I`` via Hochster's formula.

	``β_{i,j}`` sums the ranks of ``H̃_{j−i−1}(Δ_W)`` over vertex sets ``W``
	with ``|W| = j``. Sets ``W`` containing a vertex that lies in no
	generator inside ``W`` restrict to a cone and are skipped.

	Raises
	------
	~graphreg.exceptions.IdealZero

	Parameters
	----------
	ideal : SquarefreeMonomialIdeal
		A proper nonzero ideal
	field : Union[~graphreg.homology.FieldSpec, str, None]
		Coefficient field (default: ``settings.DEFAULT_FIELD``)
	"""
	if ideal.is_zero:
		raise exceptions.IdealZero()
	field = FieldSpec.coerce(field)
	delta = stanley_reisner_complex(ideal)

	entries = {}
	scanned = 0
	for subset in range(1, 1 << ideal.ambient):
		covered = 0
		for g in ideal._gens:
			if not g & ~subset:
				covered |= g
		if covered != subset:
			continue
		scanned += 1
		j = popcount(subset)
		ranks = reduced_homology_ranks(delta.restrict(subset), field)
		for index, rank in enumerate(ranks):
			if rank:
				key = (j - index, j)
				entries[key] = entries.get(key, 0) + rank
	logger.debug("Hochster scan over %d variables visited %d non-cone subsets", ideal.ambient, scanned)
	return BettiTable(entries)


def regularity_quotient(ideal, field=None):
	"""Returns ``reg(R/I)``.

	Raises
	------
	~graphreg.exceptions.IdealZero
	"""
	return graded_betti(ideal, field).regularity()


def regularity_ideal(ideal, field=None):
	"""Returns ``reg(I) = reg(R/I) + 1``."""
	return regularity_quotient(ideal, field) + 1


class ColonSumReport(typing.NamedTuple):
	variable: int
	field: FieldSpec
	hilbert: HilbertSeries
	hilbert_sum: HilbertSeries
	hilbert_colon: HilbertSeries
	additivity: bool
	reg: int
	reg_sum: int
	reg_colon: int
	disjunction: bool

	@property
	def holds(self):
		return self.additivity and self.disjunction


def check_colon_sum_additivity(ideal, variable, field=None):
	"""Checks the exact sequence ``0 → R/(I:x)(−1) → R/I → R/(I+(x)) → 0``.

	Two things are asserted: Hilbert series additivity
	``H(R/I) = H(R/(I+(x))) + λ·H(R/(I:x))`` and that ``reg(I)`` equals
	``reg(I:x) + 1`` or ``reg(I+(x))``.

	Raises
	------
	~graphreg.exceptions.AdditivityViolation
	~graphreg.exceptions.VariableAbsent

	Returns
	-------
		:class:`ColonSumReport`
	"""
	field = FieldSpec.coerce(field)
	colon = colon_by_variable(ideal, variable)
	summed = add_variable(ideal, variable)

	hilbert = hilbert_series_of_ideal(ideal)
	hilbert_sum = hilbert_series_of_ideal(summed)
	hilbert_colon = hilbert_series_of_ideal(colon)
	additivity = hilbert == hilbert_sum + hilbert_colon * LAMBDA_POLY

	reg = regularity_ideal(ideal, field)
	reg_sum = regularity_ideal(summed, field)
	reg_colon = regularity_ideal(colon, field)
	disjunction = reg == reg_colon + 1 or reg == reg_sum

	report = ColonSumReport(
		variable, field, hilbert, hilbert_sum, hilbert_colon, additivity,
		reg, reg_sum, reg_colon, disjunction
	)
	if not report.holds:
		raise exceptions.AdditivityViolation(report)
	return report
