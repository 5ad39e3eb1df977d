"""The two Auslander-Reiten translates as explicit presentations.

The inverse translate of X is the cokernel of the natural map

    X (x) Algebra  -->  X (x) DualArrows,
    x (x) q  |->  sum_a (xa (x) a* (x) q)  -  sum_a (x (x) a* (x) aq),

where DualArrows is the bimodule with basis (path, dual arrow, path) and
the sums run over arrows a leaving, respectively entering, the junction
vertex.  The direct translate of X is the kernel of the transposed-style
map Maps(DualArrows, X) --> Maps(Algebra, X) given by precomposition.

For transporting extension classes there is additionally a two-term
projective presentation of the inverse translate,

    (X (x) Arrows (x) DualArrows) (+) (X (x) Algebra (x) Algebra)
        --> X (x) Algebra (x) DualArrows --> inverse translate --> 0,

whose left block is the resolution differential tensored with the dual
side and whose right block lifts the defining map above.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactmat import Matrix, MatrixBuilder
from .quiverpath import enumerate_paths
from .repcat import (ExactnessError, ExtClass, LabeledRep, PreconditionError, Rep,
                     RepMorphism, SES, cocycle_from_ses, ext1_from_presentation,
                     has_injective_summand, hom_model, induced_model,
                     middles_arrow_path_dual, middles_dual_arrows, middles_path_dual,
                     middles_path_path, morphism_cokernel, morphism_hstack,
                     morphism_kernel, rep_direct_sum, ses_from_cocycle,
                     std_resolutions, DUAL_ARROWS)


@dataclass(frozen=True, eq=False)
class TranslatePresentation:
    """Inverse-translate data for one representation.

    unit_model and dual_model are the induced models X (x) Algebra and
    X (x) DualArrows; c_map is the defining map between them; translate
    is its cokernel with projection proj and vertexwise sections.
    """

    X: Rep
    unit_model: LabeledRep
    dual_model: LabeledRep
    c_map: RepMorphism
    translate: Rep
    proj: RepMorphism
    sections: tuple[Matrix, ...]


def _c_map(x: Rep, unit: LabeledRep, dual: LabeledRep) -> RepMorphism:
    q = x.quiver
    pb = enumerate_paths(q)
    fs = x.field
    builders = [MatrixBuilder(fs, dual.rep.dims[v], unit.rep.dims[v])
                for v in range(q.vertex_count)]
    one = fs.one()
    for (key, qi), (v, start, size) in unit.blocks.items():
        _, vert = key
        b = builders[v]
        for a in q.arrows_from(vert):
            if x.dims[q.target(a)] == 0:
                continue
            _, s1, _ = dual.block(("d", a), qi)
            for k in range(size):
                b.add_column(s1, start + k, x.mats[a], k)
        for a in q.arrows_into(vert):
            aq = pb.extend_left(a, qi)
            _, s2, _ = dual.block(("d", a), aq)
            for k in range(size):
                b.add(s2 + k, start + k, -one)
    return RepMorphism(unit.rep, dual.rep, tuple(b.build() for b in builders))


@lru_cache(maxsize=64)
def translate_presentation(x: Rep) -> TranslatePresentation:
    res = std_resolutions(x)
    unit = res.proj_unit
    dual = induced_model(x, middles_dual_arrows(x.quiver))
    c_map = _c_map(x, unit, dual)
    if not c_map.is_intertwiner():
        raise ExactnessError("defining map of the inverse translate must intertwine")
    translate, proj, sections = morphism_cokernel(c_map)
    return TranslatePresentation(X=x, unit_model=unit, dual_model=dual, c_map=c_map,
                                 translate=translate, proj=proj, sections=sections)


def tau_inverse_rep(x: Rep) -> Rep:
    return translate_presentation(x).translate


def dual_transport(f: RepMorphism, dom: LabeledRep, cod: LabeledRep) -> RepMorphism:
    """f (x) identity between two induced models with matching middles."""
    q = f.dom.quiver
    fs = f.dom.field
    builders = [MatrixBuilder(fs, cod.rep.dims[v], dom.rep.dims[v])
                for v in range(q.vertex_count)]
    wl = {m.key: m.wl for m in cod.middles}
    for (key, qi), (v, start, size) in dom.blocks.items():
        m = f.mats[wl[key]]
        if m.rows == 0:
            continue
        _, s1, _ = cod.block(key, qi)
        for k in range(size):
            builders[v].add_column(s1, start + k, m, k)
    return RepMorphism(dom.rep, cod.rep, tuple(b.build() for b in builders))


def tau_inverse_mor(f: RepMorphism) -> RepMorphism:
    """Inverse translate of a morphism, via the defining presentations."""
    tpx = translate_presentation(f.dom)
    tpy = translate_presentation(f.cod)
    lifted = dual_transport(f, tpx.dual_model, tpy.dual_model)
    mats = tuple(tpy.proj.mats[i] @ lifted.mats[i] @ tpx.sections[i]
                 for i in range(f.dom.quiver.vertex_count))
    out = RepMorphism(tpx.translate, tpy.translate, mats)
    for i in range(f.dom.quiver.vertex_count):
        if out.mats[i] @ tpx.proj.mats[i] != tpy.proj.mats[i] @ lifted.mats[i]:
            raise ExactnessError("translate of a morphism is not induced; naturality broken")
    return out


@dataclass(frozen=True, eq=False)
class DirectTranslateData:
    """Direct translate of X inside the coinduced model Maps(DualArrows, X)."""

    X: Rep
    hom_dual: LabeledRep
    hom_unit: LabeledRep
    c_star: RepMorphism
    translate: Rep
    embed: RepMorphism


def _c_star_map(x: Rep, hom_dual: LabeledRep, hom_unit: LabeledRep) -> RepMorphism:
    q = x.quiver
    pb = enumerate_paths(q)
    fs = x.field
    builders = [MatrixBuilder(fs, hom_unit.rep.dims[v], hom_dual.rep.dims[v])
                for v in range(q.vertex_count)]
    one = fs.one()
    for (key, p), (v, start, size) in hom_dual.blocks.items():
        _, a = key
        b = builders[v]
        src, arrows = pb.paths[p]
        if arrows and arrows[-1] == a:
            prefix = pb.index[(src, arrows[:-1])]
            _, s1, _ = hom_unit.block(("u", q.source(a)), prefix)
            for k in range(size):
                b.add(s1 + k, start + k, one)
        if x.dims[q.target(a)]:
            _, s2, _ = hom_unit.block(("u", q.target(a)), p)
            for k in range(size):
                b.add_column(s2, start + k, x.mats[a], k, -one)
    return RepMorphism(hom_dual.rep, hom_unit.rep, tuple(b.build() for b in builders))


@lru_cache(maxsize=64)
def direct_translate_data(x: Rep) -> DirectTranslateData:
    hom_dual = hom_model(DUAL_ARROWS, x)
    res = std_resolutions(x)
    hom_unit = res.hom_unit
    c_star = _c_star_map(x, hom_dual, hom_unit)
    if not c_star.is_intertwiner():
        raise ExactnessError("defining map of the direct translate must intertwine")
    translate, embed = morphism_kernel(c_star)
    return DirectTranslateData(X=x, hom_dual=hom_dual, hom_unit=hom_unit,
                               c_star=c_star, translate=translate, embed=embed)


def tau_rep(x: Rep) -> Rep:
    return direct_translate_data(x).translate


def tau_inverse_ses(s: SES) -> SES:
    """Apply the inverse translate to a short exact sequence.

    Precondition: the quotient term has no injective summand (otherwise
    the left end of the translated sequence can fail to be exact).
    """
    if has_injective_summand(s.quo):
        raise PreconditionError("quotient has an injective summand")
    inj_t = tau_inverse_mor(s.inj)
    surj_t = tau_inverse_mor(s.surj)
    out = SES(sub=inj_t.dom, mid=inj_t.cod, quo=surj_t.cod, inj=inj_t, surj=surj_t)
    out.validate()
    return out


def tau_inverse_class_via_ses(z: ExtClass) -> ExtClass:
    """Inverse translate on extension classes, through the realized sequence."""
    return cocycle_from_ses_translated(ses_from_cocycle(z))


def cocycle_from_ses_translated(s: SES) -> ExtClass:
    return cocycle_from_ses(tau_inverse_ses(s))


# ---------------------------------------------------------------------------
# the double presentation used to translate classes without realizing them


@dataclass(frozen=True, eq=False)
class DoublePresentation:
    """Two-term projective presentation of the inverse translate of X.

    p1_left is X (x) Arrows (x) DualArrows, p1_right is
    X (x) Algebra (x) Algebra, presented is X (x) Algebra (x) DualArrows.
    d restricts to the resolution differential on the left block and to a
    lift of the translate's defining map on the right block; collapse
    multiplies the middle path into X; onto is the surjection onto the
    inverse translate.
    """

    X: Rep
    p1_left: LabeledRep
    p1_right: LabeledRep
    p1: Rep
    presented: LabeledRep
    d: RepMorphism
    collapse: RepMorphism
    onto: RepMorphism


def _double_left_map(x: Rep, left: LabeledRep, pres: LabeledRep) -> RepMorphism:
    q = x.quiver
    pb = enumerate_paths(q)
    fs = x.field
    builders = [MatrixBuilder(fs, pres.rep.dims[v], left.rep.dims[v])
                for v in range(q.vertex_count)]
    one = fs.one()
    for (key, qi), (v, start, size) in left.blocks.items():
        _, b_arrow, r, a = key
        b = builders[v]
        br = pb.extend_left(b_arrow, r)
        _, s1, _ = pres.block(("pd", br, a), qi)
        for k in range(size):
            b.add(s1 + k, start + k, one)
        if x.dims[q.target(b_arrow)]:
            _, s2, _ = pres.block(("pd", r, a), qi)
            for k in range(size):
                b.add_column(s2, start + k, x.mats[b_arrow], k, -one)
    return RepMorphism(left.rep, pres.rep, tuple(b.build() for b in builders))


def _double_right_map(x: Rep, right: LabeledRep, pres: LabeledRep) -> RepMorphism:
    q = x.quiver
    pb = enumerate_paths(q)
    fs = x.field
    builders = [MatrixBuilder(fs, pres.rep.dims[v], right.rep.dims[v])
                for v in range(q.vertex_count)]
    one = fs.one()
    for (key, qi), (v, start, size) in right.blocks.items():
        _, p = key
        b = builders[v]
        vert = pb.target(p)
        for a in q.arrows_from(vert):
            pa = pb.extend_right(p, a)
            _, s1, _ = pres.block(("pd", pa, a), qi)
            for k in range(size):
                b.add(s1 + k, start + k, one)
        for a in q.arrows_into(vert):
            aq = pb.extend_left(a, qi)
            _, s2, _ = pres.block(("pd", p, a), aq)
            for k in range(size):
                b.add(s2 + k, start + k, -one)
    return RepMorphism(right.rep, pres.rep, tuple(b.build() for b in builders))


def _collapse_map(x: Rep, pres: LabeledRep, dual: LabeledRep) -> RepMorphism:
    q = x.quiver
    pb = enumerate_paths(q)
    fs = x.field
    builders = [MatrixBuilder(fs, dual.rep.dims[v], pres.rep.dims[v])
                for v in range(q.vertex_count)]
    for (key, qi), (v, start, size) in pres.blocks.items():
        _, p, a = key
        m = x.act_index(pb, p)
        if m.rows == 0:
            continue
        _, s1, _ = dual.block(("d", a), qi)
        for k in range(size):
            builders[v].add_column(s1, start + k, m, k)
    return RepMorphism(pres.rep, dual.rep, tuple(b.build() for b in builders))


@lru_cache(maxsize=64)
def double_presentation(x: Rep) -> DoublePresentation:
    q = x.quiver
    tp = translate_presentation(x)
    left = induced_model(x, middles_arrow_path_dual(q))
    right = induced_model(x, middles_path_path(q))
    pres = induced_model(x, middles_path_dual(q))
    p1 = rep_direct_sum(left.rep, right.rep)
    dl = _double_left_map(x, left, pres)
    dr = _double_right_map(x, right, pres)
    d = morphism_hstack(dl, dr, p1)
    collapse = _collapse_map(x, pres, tp.dual_model)
    if not d.is_intertwiner() or not collapse.is_intertwiner():
        raise ExactnessError("double presentation maps must intertwine")
    onto = RepMorphism(pres.rep, tp.translate,
                       tuple(tp.proj.mats[i] @ collapse.mats[i]
                             for i in range(q.vertex_count)))
    return DoublePresentation(X=x, p1_left=left, p1_right=right, p1=p1,
                              presented=pres, d=d, collapse=collapse, onto=onto)


def tau_inverse_class(z: ExtClass) -> ExtClass:
    """Inverse translate on extension classes, via the double presentation.

    Sends a class in Ext1(X, Y) to one in Ext1(inv X, inv Y) without
    building the middle term.  Precondition: X has no injective summand.
    """
    x, y = z.X, z.Y
    if has_injective_summand(x):
        raise PreconditionError("first argument has an injective summand")
    q = x.quiver
    fs = x.field
    pb = enumerate_paths(q)
    dp = double_presentation(x)
    tpy = translate_presentation(y)
    # vertical map on the left block: (x, b, r, a*, q) |-> (Y_r g_b x, a*, q)
    builders = [MatrixBuilder(fs, tpy.dual_model.rep.dims[v], dp.p1_left.rep.dims[v])
                for v in range(q.vertex_count)]
    for (key, qi), (v, start, size) in dp.p1_left.blocks.items():
        _, b_arrow, r, a = key
        m = y.act_index(pb, r) @ z.cocycle[b_arrow]
        if m.rows == 0:
            continue
        _, s1, _ = tpy.dual_model.block(("d", a), qi)
        for k in range(size):
            builders[v].add_column(s1, start + k, m, k)
    lift_left = RepMorphism(dp.p1_left.rep, tpy.dual_model.rep,
                            tuple(b.build() for b in builders))
    w_left = RepMorphism(dp.p1_left.rep, tpy.translate,
                         tuple(tpy.proj.mats[i] @ lift_left.mats[i]
                               for i in range(q.vertex_count)))
    w_right = RepMorphism.zero(dp.p1_right.rep, tpy.translate)
    w = morphism_hstack(w_left, w_right, dp.p1)
    return ext1_from_presentation(dp.d, w, dp.onto)
