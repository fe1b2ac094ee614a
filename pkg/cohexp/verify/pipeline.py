from __future__ import annotations

import time
from typing import Callable, Optional

import numpy as np
from loguru import logger

from cohexp.bracket import (
    BracketAlgebra,
    is_subalgebra,
    sl2,
    sl2_h_free_subalgebra,
    subalgebras_of_dim,
)
from cohexp.exceptions import ContractError
from cohexp.fpla import PrimeField, Subspace
from cohexp.groups import CODE_DTYPE, BracketGroup, closure, sylow_order_valuation, wreath_sylow
from cohexp.lattice import (
    EmbeddingReport,
    HypothesisFailedError,
    WitnessFamily,
    frattini,
    hyperplane_preimages,
    index_p2_intersection,
    index_p2_intersection_direct,
    subgroups_intersection,
    verify_embedding,
    w_part,
    witness_family,
)
from cohexp.logger import stage_context
from cohexp.settings import get_verify_settings, resolve_cap
from cohexp.utils.parallel import all_chunks
from cohexp.utils.sampling import pair_sweep
from cohexp.verify.report import CheckResult, CheckStatus, VerificationReport

SUPPORTED_PRIMES = (3, 5, 7)
REDUCED_PRIMES = (7,)

INDEX_P2_TRIVIAL = "the intersection of all subgroups of index p^2 in G is trivial"

# verbatim source quotes, one per check id
ANCHORS = {
    "algebra.sl2_valid": "bracket algebras (Lie algebras minus the Jacobi identity)",
    "algebra.sl2_brackets": "[h, x_+] = 2x_+",
    "group.cocycle_condition": "It is well-known that there is a bracket",
    "group.p_power_map": "defined using the commutator and $p$-power in the group",
    "group.commutators": "the commutator of x and y is central",
    "group.center_is_w": "1 → W → G → V → 1",
    "group.order": "G has exponent p^2 and order p^6",
    "group.exponent": "G has exponent p^2 and order p^6",
    "algebra.subalgebra_count": "Every 2-dimensional sub(Lie)algebra S of sl₂",
    "algebra.explicit_subalgebra": "as 4\\alpha =1",
    "algebra.h_not_in_s": "h is not in S",
    "lattice.maximal_count": INDEX_P2_TRIVIAL,
    "lattice.frattini_of_g": INDEX_P2_TRIVIAL,
    "lattice.frattini_of_maximals": INDEX_P2_TRIVIAL,
    "lattice.frattini_shape": INDEX_P2_TRIVIAL,
    "lattice.index_p2_intersection": INDEX_P2_TRIVIAL,
    "lattice.index_p2_cross_check": INDEX_P2_TRIVIAL,
    "lattice.witness_family": "it suffices to show",
    "lattice.lift_meets_w": "has a subgroup K of index p^2 in G lying over it",
    "lattice.lift_words": "t=x^ly^s for some l,s",
    "lattice.line_preimages_meet_in_w": (
        "preimage of any 1-dimensional subspace of V is a subgroup of index p^2"
    ),
    "lattice.family_intersection": "index $p^n$ is trivial",
    "lattice.coset_homomorphisms": "P acts on the left cosets of H_i",
    "lattice.embedding": (
        "Putting these homomorphisms together we get a homomorphism from P into L … injective"
    ),
    "lattice.image_exponents": "exp(S(p^n))=e_{\\infty} (S(p^n)) = e(S(p^n)) = p^n",
    "sylow.image_orders": "φ_i : P → S(p^n)",
    "sylow.wreath": "isomorphic to the wreath product of S(p^{n-1}) with Z/pZ",
    "summary.divisibility_chain": "gives us the counterexample we sought",
    "cited.e_of_g": "elements of order p^3 in H^4(G)",
    "cited.group_uniqueness": "there exists a unique such group corresponding to it",
    "cited.sylow_conjugacy": "embeds in a direct product L of a few copies of S(p²)",
    "cited.subgroup_divisibility": "divide",
    "cited.nakayama_rim": "standard Nakayama-Rim Theory",
}

# cited inputs: never computed here
CITED_FACTS = (
    (
        "cited.e_of_g",
        "H^4(G) contains elements of order p^3, so e(G) = p^3",
        {"kind": "external computation", "degree": 4},
    ),
    (
        "cited.group_uniqueness",
        "the group attached to a bracket algebra by this construction is unique up to isomorphism",
        {"kind": "structural fact"},
    ),
    (
        "cited.sylow_conjugacy",
        "every p-subgroup of Sym(p^2) is conjugate into the Sylow subgroup S(p^2)",
        {"kind": "Sylow theorem"},
    ),
    (
        "cited.subgroup_divisibility",
        "e_inf(P1) divides e_inf(P2) whenever P1 is a subgroup of P2",
        {"kind": "finite generation argument"},
    ),
    (
        "cited.nakayama_rim",
        "a finite p-group acting through a Sylow subgroup of Sym(p^n) has e_inf dividing p^n",
        {"kind": "Nakayama-Rim theory"},
    ),
)


def _status(ok: bool) -> CheckStatus:
    return CheckStatus.PASS if ok else CheckStatus.FAIL


class CounterexamplePipeline:
    """
    Runs the counterexample checks for G(sl_2, F_p) stage by stage.

    Every stage appends CheckResults to the report. For p = 7 only the reduced
    set runs: algebra validation, sampled sweeps, order, exponent and the
    subalgebra checks.
    """

    def __init__(
        self,
        p: int,
        *,
        threads: Optional[int] = None,
        seed: Optional[int] = None,
        samples: Optional[int] = None,
        cap: Optional[int] = None,
    ) -> None:
        field = PrimeField(p)
        if p not in SUPPORTED_PRIMES:
            raise ContractError(f"verification supports p in {SUPPORTED_PRIMES}, got {p}")
        settings = get_verify_settings()
        self.field = field
        self.p = p
        self.threads = settings.threads if threads is None else threads
        self.seed = settings.seed if seed is None else seed
        self.samples = settings.sample_pairs if samples is None else samples
        self.cap = cap
        self.budget = resolve_cap(None, "sweep_budget")
        self.rng = np.random.default_rng(self.seed)
        self.reduced = p in REDUCED_PRIMES
        self.algebra: Optional[BracketAlgebra] = None
        self.group: Optional[BracketGroup] = None
        self.subalgebras: list[Subspace] = []
        self.family: Optional[WitnessFamily] = None
        self.embedding: Optional[EmbeddingReport] = None
        self.exponent: Optional[int] = None
        self.report = VerificationReport(p=p)

    @property
    def stages(self) -> list[Callable[[], None]]:
        full = [
            self.validate_algebra,
            self.build_group,
            self.order_and_exponent,
            self.check_subalgebras,
            self.check_maximal_subgroups,
            self.check_index_p2_intersection,
            self.check_witness_family,
            self.check_embedding,
            self.check_sylow_targets,
            self.check_divisibility_chain,
            self.record_cited,
        ]
        if self.reduced:
            return full[:4]
        return full

    def run(self) -> VerificationReport:
        for stage in self.stages:
            started = time.perf_counter()
            with stage_context(stage.__name__, p=self.p):
                stage()
                logger.info(f"done in {time.perf_counter() - started:.2f}s")
        self.report.verdict = self.verdict()
        return self.report

    def add(self, check_id: str, claim: str, ok: bool, **details: object) -> bool:
        self.report.checks.append(
            CheckResult(
                check_id=check_id,
                anchor=ANCHORS[check_id],
                claim=claim,
                status=_status(ok),
                details=details,
            )
        )
        if not ok:
            logger.warning(f"check {check_id} failed: {details}")
        return ok

    # -- stages --------------------------------------------------------------

    def validate_algebra(self) -> None:
        self.algebra = sl2(self.field)
        validation = self.algebra.validate()
        self.add(
            "algebra.sl2_valid",
            "sl_2 over F_p is alternating and satisfies the Jacobi identity",
            validation.alternating and validation.jacobi,
            alternating=validation.alternating,
            jacobi=validation.jacobi,
        )
        b = self.algebra
        h, xp, xm = (b.basis_vector(n) for n in b.names)
        self.add(
            "algebra.sl2_brackets",
            "[h, x+] = 2x+, [h, x-] = -2x-, [x+, x-] = h",
            b.bracket(h, xp) == xp * 2 and b.bracket(h, xm) == xm * -2 and b.bracket(xp, xm) == h,
        )

    def build_group(self) -> None:
        assert self.algebra is not None
        self.group = BracketGroup(self.algebra, cap=self.cap)
        self._cocycle_condition()
        self._p_power_map()
        self._commutators()
        g = self.group
        center = g.center()
        self.add(
            "group.center_is_w",
            "W = {(0, s)} is the centre of G",
            center == g.w_subgroup(),
            center_order=center.order,
        )

    def _cocycle_condition(self) -> None:
        g = self.group
        assert g is not None
        add, cocycle, q = g.add_table, g.cocycle_table, g.q

        def holds(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> bool:
            left = add[cocycle[a, b], cocycle[add[a, b], c]]
            right = add[cocycle[b, c], cocycle[a, add[b, c]]]
            return bool(np.array_equal(left, right))

        triples = q**3
        if triples <= self.budget:
            everything = np.arange(q, dtype=CODE_DTYPE)
            block = max(1, (1 << 20) // (q * q))

            def chunk_holds(rows: range) -> bool:
                for start in range(rows.start, rows.stop, block):
                    a = np.arange(start, min(start + block, rows.stop), dtype=CODE_DTYPE)
                    if not holds(
                        a[:, None, None], everything[None, :, None], everything[None, None, :]
                    ):
                        return False
                return True

            ok = all_chunks(chunk_holds, q, self.threads)
            sweep = f"exhaustive, {triples} triples"
        else:
            logger.warning(f"{triples} triples exceed the sweep budget; sampling {self.samples}")
            a, b, c = self.rng.integers(0, q, (3, self.samples), dtype=CODE_DTYPE)
            ok = holds(a, b, c)
            sweep = f"sampled, {self.samples} triples"
        self.add(
            "group.cocycle_condition",
            "c(a, b) + c(a + b, c) = c(b, c) + c(a, b + c) for all a, b, c in V",
            ok,
            sweep=sweep,
        )

    def _p_power_map(self) -> None:
        g = self.group
        assert g is not None
        codes = g.codes(self.cap)
        a, _ = g.split(codes)
        ok = bool(np.array_equal(g.pow(codes, self.p), g.join(0, a)))
        self.add(
            "group.p_power_map",
            "(a, s)^p = (0, a) for every element of G",
            ok,
            sweep=f"exhaustive, {codes.size} elements",
        )

    def _commutators(self) -> None:
        g = self.group
        assert g is not None
        sweep = pair_sweep(g.order, self.budget, self.samples, self.rng)
        a, _ = g.split(sweep.left)
        b, _ = g.split(sweep.right)
        expected = g.join(0, g.bracket_table[a, b])
        ok = bool(np.array_equal(g.commutator(sweep.left, sweep.right), expected))
        self.add(
            "group.commutators",
            "the commutator of (a, s) and (b, t) is (0, [a, b])",
            ok,
            sweep=sweep.describe(),
        )

    def order_and_exponent(self) -> None:
        g = self.group
        assert g is not None
        order = g.order_of_group(cross_check=True)
        self.add(
            "group.order",
            "G has order p^6",
            order == self.p**6,
            order=order,
        )
        exponent = self.exponent = g.group_exponent()
        self.add(
            "group.exponent",
            "G has exponent p^2",
            exponent == self.p**2,
            exponent=exponent,
        )

    def check_subalgebras(self) -> None:
        assert self.algebra is not None
        self.subalgebras = subalgebras_of_dim(self.algebra, 2, cap=self.cap)
        self.add(
            "algebra.subalgebra_count",
            "sl_2 over F_p has exactly p + 1 two-dimensional subalgebras",
            len(self.subalgebras) == self.p + 1,
            count=len(self.subalgebras),
        )
        s = sl2_h_free_subalgebra(self.field)
        alpha = self.field.inv(4)
        self.add(
            "algebra.explicit_subalgebra",
            "S = span{h + x+, -a h + x-} with 4a = 1 is closed under the bracket",
            is_subalgebra(self.algebra, s) and s in self.subalgebras,
            alpha=alpha,
            basis=[list(v.digits) for v in s.basis],
        )
        h = self.algebra.basis_vector("h")
        self.add(
            "algebra.h_not_in_s",
            "h is not in S",
            h not in s,
        )

    def check_maximal_subgroups(self) -> None:
        g = self.group
        assert g is not None
        w = g.w_subgroup()
        maximals = hyperplane_preimages(g)
        expected = (self.p**3 - 1) // (self.p - 1)
        self.add(
            "lattice.maximal_count",
            "G has (p^3 - 1)/(p - 1) maximal subgroups, the preimages of the hyperplanes of V",
            len(maximals) == expected
            and all(m.subgroup.index == self.p and w.issubset(m.subgroup) for m in maximals),
            count=len(maximals),
        )
        whole = closure(g, g.generators(), cap=self.cap)
        phi_g = frattini(whole, cap=self.cap)
        self.add(
            "lattice.frattini_of_g",
            "the Frattini subgroup of G is W",
            phi_g == w,
            order=phi_g.order,
        )
        inside_w = True
        shape_ok = True
        subalgebra_planes = 0
        for m in maximals:
            phi = frattini(m.subgroup, cap=self.cap)
            inside_w &= phi.issubset(w)
            if is_subalgebra(g.algebra, m.hyperplane):
                subalgebra_planes += 1
                shape_ok &= phi == w_part(g, m.hyperplane)
            else:
                shape_ok &= phi == w
        self.add(
            "lattice.frattini_of_maximals",
            "the Frattini subgroup of every maximal subgroup lies in W",
            inside_w,
        )
        self.add(
            "lattice.frattini_shape",
            "Phi(M) = {0} x U when the hyperplane U is a subalgebra and W otherwise",
            shape_ok,
            subalgebra_hyperplanes=subalgebra_planes,
        )

    def check_index_p2_intersection(self) -> None:
        g = self.group
        assert g is not None
        intersection = index_p2_intersection(g, cap=self.cap)
        self.add(
            "lattice.index_p2_intersection",
            "the intersection of all subgroups of index p^2 in G is trivial",
            intersection.is_trivial(),
            order=intersection.order,
            method="intersection of Phi(M) over maximal M",
            containment=(
                "an index-p^2 subgroup H lies in some maximal M with [M:H] = p, "
                "so H is maximal in M and contains Phi(M)"
            ),
            attainment=(
                "Phi(M) is the intersection of the maximal subgroups of M, "
                "each of index p^2 in G"
            ),
        )
        if self.p == 3:
            direct = index_p2_intersection_direct(g, cap=self.cap)
            self.add(
                "lattice.index_p2_cross_check",
                "listing the maximal subgroups of every maximal subgroup gives the same intersection",
                direct == intersection,
                order=direct.order,
            )

    def check_witness_family(self) -> None:
        g = self.group
        assert g is not None
        try:
            self.family = witness_family(g, cap=self.cap)
        except HypothesisFailedError as e:
            self.add(
                "lattice.witness_family",
                "line preimages and subalgebra lifts are subgroups of index p^2",
                False,
                error=str(e),
            )
            return
        family = self.family
        lines = (self.p**3 - 1) // (self.p - 1)
        self.add(
            "lattice.witness_family",
            "line preimages and subalgebra lifts are subgroups of index p^2",
            len(family.line_preimages) == lines
            and len(family.lifts) == self.p + 1
            and all(h.order == self.p**4 for h in family.members),
            members=len(family.members),
            line_preimages=len(family.line_preimages),
            lifts=len(family.lifts),
        )
        w = g.w_subgroup()
        lifts_ok = True
        words_ok = True
        for s, k in zip(family.subalgebras, family.lifts):
            lifts_ok &= k.intersect(w) == w_part(g, s)
            x, y = k.generators[:2]
            count = self.p**2
            words = np.unique(g.mul(_powers(g, x, count)[:, None], _powers(g, y, count)[None, :]))
            words_ok &= np.array_equal(words, k.elements)
        self.add(
            "lattice.lift_meets_w",
            "the lift K of a 2-dimensional subalgebra S has order p^4 and meets W in {0} x S",
            lifts_ok,
        )
        self.add(
            "lattice.lift_words",
            "every element of K is x^l y^m for the lifts x, y of a basis of S",
            words_ok,
        )
        line_meet = subgroups_intersection(family.line_preimages)
        self.add(
            "lattice.line_preimages_meet_in_w",
            "the preimages of the lines of V intersect in W",
            line_meet == w,
            order=line_meet.order,
        )
        self.add(
            "lattice.family_intersection",
            "the witness family has trivial intersection",
            family.intersection.is_trivial(),
            order=family.intersection.order,
        )

    def check_embedding(self) -> None:
        g = self.group
        if self.family is None or not self.family.intersection.is_trivial():
            self.add(
                "lattice.embedding",
                "G embeds in a product of copies of Sym(p^2) through coset actions",
                False,
                error="witness family unavailable or with nontrivial intersection",
            )
            return
        assert g is not None
        self.embedding = verify_embedding(
            g,
            self.family.members,
            threads=self.threads,
            seed=self.seed,
            samples=self.samples,
            cap=self.cap,
        )
        e = self.embedding
        self.add(
            "lattice.coset_homomorphisms",
            "each coset action of G on G/H is a homomorphism into Sym(p^2)",
            e.all_homomorphisms,
            sweeps=sorted({m.sweep for m in e.members}),
        )
        self.add(
            "lattice.embedding",
            "G embeds in a product of copies of Sym(p^2) through coset actions",
            e.injective and e.index_bound == self.p**2,
            copies=e.family_size,
            degree=e.index_bound,
        )
        self.add(
            "lattice.image_exponents",
            "each coset image is a p-group of exponent at most p^2",
            all(m.image_is_prime_power and m.image_exponent <= self.p**2 for m in e.members),
            exponents=sorted({m.image_exponent for m in e.members}),
        )

    def check_sylow_targets(self) -> None:
        degree = self.p**2
        sylow_order = self.p ** sylow_order_valuation(self.p, degree)
        images_ok = self.embedding is not None and all(
            sylow_order % m.image_order == 0 for m in self.embedding.members
        )
        self.add(
            "sylow.image_orders",
            "every coset image has order dividing |S(p^2)|",
            images_ok,
            sylow_order=sylow_order,
        )
        if sylow_order > resolve_cap(self.cap, "enumeration_cap"):
            logger.info(f"S({degree}) has {sylow_order} elements; not materialized")
            return
        s = wreath_sylow(self.p, 2, cap=self.cap)
        order, exponent = s.order(), s.exponent()
        self.add(
            "sylow.wreath",
            "S(p^2) is the wreath product of Z/p with Z/p, of exponent p^2",
            order == sylow_order and exponent == degree,
            order=order,
            exponent=exponent,
        )

    def check_divisibility_chain(self) -> None:
        g = self.group
        assert g is not None
        bound = self.embedding.index_bound if self.embedding is not None else None
        chain = [self.exponent, bound, self.p**3, g.order]
        ok = None not in chain and all(b % a == 0 for a, b in zip(chain, chain[1:]))  # type: ignore[operator]
        self.add(
            "summary.divisibility_chain",
            "exp(G) | e_inf(G) | e(G) | |G|, with e(G) = p^3 taken from the cited value",
            ok,
            chain=chain,
        )

    def record_cited(self) -> None:
        for check_id, claim, details in CITED_FACTS:
            self.report.checks.append(
                CheckResult(
                    check_id=check_id,
                    anchor=ANCHORS[check_id],
                    claim=claim,
                    status=CheckStatus.CITED,
                    details=details,
                )
            )

    # -- verdict ---------------------------------------------------------------

    def verdict(self) -> list[str]:
        p = self.p
        if self.reduced:
            return [
                f"reduced check set for p = {p}: "
                + ("all computed checks pass" if self.report.passed else "a computed check failed"),
                "e_inf(G) bound not computed for this prime",
            ]
        if not self.report.passed:
            failure = self.report.first_failure
            return [f"check failed: {failure.check_id if failure else 'unknown'}"]
        return [
            f"e_inf(G) divides {p**2} (computed: index-{p**2} subgroups meet trivially)",
            f"G not elementary abelian (computed: exp = {p**2})",
            f"e(G) = {p**3} (cited: order-{p**3} classes in H^4(G))",
            f"conclusion: e_inf(G) = {p**2} != e(G) = {p**3}",
        ]


def _powers(group: BracketGroup, x: int, count: int) -> np.ndarray:
    """x^0, x^1, ..., x^(count - 1)."""
    out = np.empty(count, dtype=CODE_DTYPE)
    current = np.int64(group.identity)
    for i in range(count):
        out[i] = current
        current = group.mul(current, np.int64(x))
    return out


def verify_counterexample(p: int, **options: object) -> VerificationReport:
    return CounterexamplePipeline(p, **options).run()  # type: ignore[arg-type]
