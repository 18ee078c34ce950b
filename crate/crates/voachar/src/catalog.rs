//! Theory records: central charge, Lie rank, module characters, and the
//! structural checks connecting them (rank bound, lattice characterization,
//! vacuum factorization).

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::json;

use crate::lattice::{discriminant_cosets, theta, EvenLattice};
use crate::modforms::{moonshine_j, partition_series};
use crate::qseries::QSeries;
use crate::rational::{format_q, q, qi, Q};
use crate::virasoro;
use crate::{Error, Result};

/// Default ceiling on enumerated module pairs in tensor products.
pub const DEFAULT_MODULE_BOUND: usize = 10_000;

/// One simple module: lowest weight and the dimension series
/// dims = sum dim(M_{n+weight}) q^n with dims(0) >= 1.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleChar {
    pub weight: Q,
    pub dims: QSeries,
}

/// Module data: fully enumerated characters, or invariants only (the weights
/// entered lambda_min but dimension series are not carried).
#[derive(Clone, Debug, PartialEq)]
pub enum ModuleSet {
    Full(Vec<ModuleChar>),
    InvariantsOnly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Theory {
    pub name: String,
    pub c: Q,
    pub lie_rank: u32,
    pub modules: ModuleSet,
    pub lambda_min: Q,
    /// Set by construction; the rank bound is only asserted for rational
    /// theories.
    pub rational: bool,
    /// Index of the vacuum module in the Full list.
    pub vacuum_index: Option<usize>,
    /// Graded character of the vacuum space (lead exponent 0), when the
    /// construction provides one: theta for lattices, the irreducible vacuum
    /// series for minimal models, 1 for free bosons.
    pub vacuum_space_char: Option<QSeries>,
    /// Free-text caveat shown in reports.
    pub note: Option<String>,
}

impl Theory {
    pub fn module_count(&self) -> Option<usize> {
        match &self.modules {
            ModuleSet::Full(list) => Some(list.len()),
            ModuleSet::InvariantsOnly => None,
        }
    }

    pub fn module_chars(&self) -> Result<&[ModuleChar]> {
        match &self.modules {
            ModuleSet::Full(list) => Ok(list),
            ModuleSet::InvariantsOnly => Err(Error::InvariantsOnly(self.name.clone())),
        }
    }

    pub fn effective_central_charge(&self) -> Q {
        &self.c - qi(24) * &self.lambda_min
    }

    /// q^(weight - c/24) * dims for module j.
    pub fn full_character(&self, j: usize) -> Result<QSeries> {
        let list = self.module_chars()?;
        let m = list
            .get(j)
            .ok_or(Error::ModuleIndexOutOfRange(j, list.len()))?;
        let offset = &m.weight - &self.c / qi(24);
        Ok(m.dims.shift(&offset))
    }

    pub fn vacuum_character(&self) -> Result<QSeries> {
        let j = self
            .vacuum_index
            .ok_or_else(|| Error::NoVacuumModule(self.name.clone()))?;
        self.full_character(j)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let modules = match &self.modules {
            ModuleSet::Full(list) => json!(list
                .iter()
                .map(|m| json!({
                    "weight": format_q(&m.weight),
                    "dims": serde_json::to_value(&m.dims).expect("series serializes"),
                }))
                .collect::<Vec<_>>()),
            ModuleSet::InvariantsOnly => json!("invariants-only"),
        };
        let mut obj = json!({
            "name": self.name,
            "c": format_q(&self.c),
            "l": self.lie_rank,
            "lambda_min": format_q(&self.lambda_min),
            "c_tilde": format_q(&self.effective_central_charge()),
            "flags": { "rational": self.rational },
            "modules": modules,
        });
        if let Some(note) = &self.note {
            obj["note"] = json!(note);
        }
        obj
    }
}

fn module_sort_key(m: &ModuleChar) -> (Q, Vec<Q>) {
    (m.weight.clone(), m.dims.dense_coeffs().to_vec())
}

/// Rank-l Heisenberg theory: c = l, one module, dims = partition_series^l.
/// Not rational; excluded from rank-bound assertions.
pub fn free_boson(l: u32, prec: i64) -> Theory {
    assert!(l >= 1, "free boson rank must be positive");
    let dims = partition_series(prec)
        .pow(l as i64)
        .expect("positive power of a unit series");
    Theory {
        name: format!("Free({l})"),
        c: qi(l as i64),
        lie_rank: l,
        modules: ModuleSet::Full(vec![ModuleChar { weight: Q::zero(), dims }]),
        lambda_min: Q::zero(),
        rational: false,
        vacuum_index: Some(0),
        vacuum_space_char: Some(QSeries::one(&qi(prec))),
        note: None,
    }
}

/// Lattice theory: c = l = rank, one module per discriminant coset with
/// weight min_norm/2 and dims = coset_theta * partition_series^rank,
/// re-based to lead exponent 0.
pub fn lattice_theory(l: &EvenLattice, prec: i64) -> Result<Theory> {
    let rank = l.rank() as i64;
    let cosets = discriminant_cosets(l, DEFAULT_MODULE_BOUND as i64)?;
    let mut modules = Vec::with_capacity(cosets.len());
    for coset in &cosets {
        let weight = &coset.min_norm / qi(2);
        let extra = weight.ceil().to_integer().to_i64().unwrap() + 1;
        let theta_prec = prec + extra;
        let series = crate::lattice::coset_theta(l, coset, theta_prec);
        let fock = partition_series(theta_prec)
            .pow(rank)
            .expect("positive power of a unit series");
        let dims = series.mul(&fock).shift(&-weight.clone()).truncate(&qi(prec));
        debug_assert_eq!(dims.lead(), Q::zero());
        modules.push(ModuleChar { weight, dims });
    }
    // discriminant_cosets sorts by min_norm, so the zero coset leads.
    Ok(Theory {
        name: format!("Lat(rank {}, det {})", l.rank(), l.det()),
        c: qi(rank),
        lie_rank: l.rank() as u32,
        modules: ModuleSet::Full(modules),
        lambda_min: Q::zero(),
        rational: true,
        vacuum_index: Some(0),
        vacuum_space_char: Some(theta(l, prec)),
        note: None,
    })
}

/// Minimal model theory: c = c_{p,q}, Lie rank 0, one module per grid weight.
pub fn minimal_theory(p: i64, qq: i64, prec: i64) -> Result<Theory> {
    let model = virasoro::minimal_model(p, qq)?;
    let mut modules = Vec::new();
    let mut vacuum_index = None;
    for (idx, (w, (m, n))) in model.weight_labels().into_iter().enumerate() {
        if w.is_zero() {
            vacuum_index = Some(idx);
        }
        let dims = virasoro::irreducible_character(p, qq, m, n, prec)?;
        modules.push(ModuleChar { weight: w, dims });
    }
    let vacuum_index = vacuum_index.expect("weight grid contains 0");
    let vacuum_space_char = Some(modules[vacuum_index].dims.clone());
    Ok(Theory {
        name: format!("Vir({p},{qq})"),
        c: model.central_charge().clone(),
        lie_rank: 0,
        modules: ModuleSet::Full(modules),
        lambda_min: model.lambda_min(),
        rational: true,
        vacuum_index: Some(vacuum_index),
        vacuum_space_char,
        note: None,
    })
}

/// The c = 24 theory with a single module and character J + 744 - 744.
pub fn moonshine_theory(prec: i64) -> Theory {
    let dims = moonshine_j(prec).shift(&qi(1)).truncate(&qi(prec));
    Theory {
        name: "Moonshine".into(),
        c: qi(24),
        lie_rank: 0,
        modules: ModuleSet::Full(vec![ModuleChar { weight: Q::zero(), dims: dims.clone() }]),
        lambda_min: Q::zero(),
        rational: true,
        vacuum_index: Some(0),
        vacuum_space_char: Some(dims),
        note: None,
    }
}

/// Unitary affine theory at level k: c = k dim(g)/(k + h_dual), invariants
/// only (no character series carried).
pub fn affine_unitary_theory(dim_g: i64, rank_g: u32, h_dual: i64, k: i64) -> Result<Theory> {
    if k < 1 {
        return Err(Error::BadArgument(format!("level must be >= 1, got {k}")));
    }
    Ok(Theory {
        name: format!("Aff({dim_g},{rank_g},{h_dual},{k})"),
        c: q(k * dim_g, k + h_dual),
        lie_rank: rank_g,
        modules: ModuleSet::InvariantsOnly,
        lambda_min: Q::zero(),
        rational: true,
        vacuum_index: None,
        vacuum_space_char: None,
        note: None,
    })
}

/// Tensor product: c, Lie rank, lambda_min add. Module characters are the
/// pairwise products (weights add, dims multiply) when both factors are full
/// and the pair count stays within module_bound; otherwise invariants only.
pub fn tensor(a: &Theory, b: &Theory, module_bound: usize) -> Theory {
    let modules_and_vacuum = match (&a.modules, &b.modules) {
        (ModuleSet::Full(la), ModuleSet::Full(lb)) if la.len() * lb.len() <= module_bound => {
            let mut pairs = Vec::with_capacity(la.len() * lb.len());
            for (i, ma) in la.iter().enumerate() {
                for (j, mb) in lb.iter().enumerate() {
                    let is_vac = a.vacuum_index == Some(i) && b.vacuum_index == Some(j);
                    pairs.push((
                        ModuleChar {
                            weight: &ma.weight + &mb.weight,
                            dims: ma.dims.mul(&mb.dims),
                        },
                        is_vac,
                    ));
                }
            }
            pairs.sort_by(|x, y| module_sort_key(&x.0).cmp(&module_sort_key(&y.0)));
            let vacuum = pairs.iter().position(|(_, v)| *v);
            Some((pairs.into_iter().map(|(m, _)| m).collect::<Vec<_>>(), vacuum))
        }
        _ => None,
    };
    let (modules, vacuum_index) = match modules_and_vacuum {
        Some((list, vac)) => (ModuleSet::Full(list), vac),
        None => (ModuleSet::InvariantsOnly, None),
    };
    let vacuum_space_char = match (&a.vacuum_space_char, &b.vacuum_space_char) {
        (Some(ca), Some(cb)) => Some(ca.mul(cb)),
        _ => None,
    };
    Theory {
        name: format!("{} * {}", a.name, b.name),
        c: &a.c + &b.c,
        lie_rank: a.lie_rank + b.lie_rank,
        modules,
        lambda_min: &a.lambda_min + &b.lambda_min,
        rational: a.rational && b.rational,
        vacuum_index,
        vacuum_space_char,
        note: None,
    }
}

/// n-th tensor power. When the final pair count would exceed module_bound,
/// every intermediate step is taken invariants-only (the result is identical
/// to repeated tensor, which would degrade at the first oversized step).
pub fn tensor_power(t: &Theory, n: u32, module_bound: usize) -> Theory {
    assert!(n >= 1, "tensor power needs a positive exponent");
    let final_count = t
        .module_count()
        .and_then(|c| (c as u128).checked_pow(n))
        .filter(|&c| c <= module_bound as u128);
    let base = if final_count.is_some() {
        t.clone()
    } else {
        Theory { modules: ModuleSet::InvariantsOnly, vacuum_index: None, ..t.clone() }
    };
    let mut acc = base.clone();
    for _ in 1..n {
        acc = tensor(&acc, &base, module_bound);
    }
    acc.name = format!("({})^{}", t.name, n);
    acc
}

/// The rank-bound report: l <= c_tilde, with c_tilde > 0 demanded for
/// nontrivial theories (c_tilde = c = 0 is the trivial case).
#[derive(Clone, Debug, PartialEq)]
pub struct RankBoundReport {
    pub holds: bool,
    pub lie_rank: Q,
    pub c_tilde: Q,
    pub positivity_ok: bool,
}

pub fn check_rank_bound(t: &Theory) -> Result<RankBoundReport> {
    if !t.rational {
        return Err(Error::NotRational(t.name.clone()));
    }
    let c_tilde = t.effective_central_charge();
    let lie_rank = qi(t.lie_rank as i64);
    let trivial = c_tilde.is_zero() && t.c.is_zero() && t.lambda_min.is_zero();
    Ok(RankBoundReport {
        holds: lie_rank <= c_tilde,
        positivity_ok: c_tilde.is_positive() || trivial,
        lie_rank,
        c_tilde,
    })
}

/// True iff the theory is rational with c_tilde = l = c, the signature that
/// singles out lattice theories among rational ones.
pub fn check_lattice_characterization(t: &Theory) -> bool {
    let l = qi(t.lie_rank as i64);
    t.rational && t.c == l && t.effective_central_charge() == l
}

/// Exact check of the vacuum factorization
/// eta^(c_tilde) * Z_vacuum = q^((l-c)/24) * eta^(c_tilde - l) * ch(Omega)
/// as q-series over the shared trusted window.
pub fn verify_vacuum_factorization(t: &Theory, prec: i64) -> Result<bool> {
    let omega = t
        .vacuum_space_char
        .as_ref()
        .ok_or_else(|| Error::NoVacuumSpaceCharacter(t.name.clone()))?;
    let z_vac = t.vacuum_character()?;
    let c_tilde = t.effective_central_charge();
    let l = qi(t.lie_rank as i64);
    let phi = crate::modforms::euler_phi(prec);
    // eta^x = q^(x/24) phi^x.
    let lhs = phi
        .pow_rational(&c_tilde)?
        .shift(&(&c_tilde / qi(24)))
        .mul(&z_vac);
    let rhs = phi
        .pow_rational(&(&c_tilde - &l))?
        .shift(&((&c_tilde - &t.c) / qi(24)))
        .mul(omega);
    Ok(lhs.agrees_with(&rhs) && !lhs.is_zero_series())
}

/// The built-in example table: free boson, lattices, minimal models,
/// Moonshine, unitary affine entries, and the large mixed tensor power.
pub fn builtin_catalog(prec: i64) -> Result<Vec<Theory>> {
    let vir25 = minimal_theory(2, 5, prec)?;
    let moonshine = moonshine_theory(prec);
    let mut big = tensor(
        &tensor_power(&vir25, 60, DEFAULT_MODULE_BOUND),
        &tensor_power(&moonshine, 11, DEFAULT_MODULE_BOUND),
        DEFAULT_MODULE_BOUND,
    );
    big.name = "Vir(2,5)^60 * Moonshine^11".into();
    big.note = Some(
        "effective central charge 288 = 60*(2/5) + 11*24 by additivity; \
         differs from the occasionally quoted value 528"
            .into(),
    );
    Ok(vec![
        free_boson(1, prec),
        lattice_theory(&crate::lattice::a1(), prec)?,
        lattice_theory(&crate::lattice::e8(), prec)?,
        minimal_theory(2, 3, prec)?,
        vir25,
        minimal_theory(3, 4, prec)?,
        moonshine,
        affine_unitary_theory(3, 1, 2, 1)?,
        affine_unitary_theory(3, 1, 2, 2)?,
        affine_unitary_theory(248, 8, 30, 1)?,
        big,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{a1, e8};
    use crate::modforms::eta;

    fn assert_dims_wellformed(t: &Theory) {
        let list = t.module_chars().unwrap();
        assert!(!list.is_empty());
        for m in list {
            assert_eq!(m.dims.lead(), Q::zero(), "{}", t.name);
            assert!(m.dims.coefficient_int(0).unwrap() >= Q::one());
            for (_, c) in m.dims.terms() {
                assert!(c.is_integer() && !c.is_negative(), "{}", t.name);
            }
            assert!(!(&m.weight - &t.lambda_min).is_negative());
        }
    }

    #[test]
    fn free_boson_dims() {
        let t1 = free_boson(1, 8);
        let d = &t1.module_chars().unwrap()[0].dims;
        for (n, v) in [(0, 1), (1, 1), (2, 2), (3, 3)] {
            assert_eq!(d.coefficient_int(n).unwrap(), qi(v));
        }
        let t2 = free_boson(2, 8);
        let d = &t2.module_chars().unwrap()[0].dims;
        for (n, v) in [(0, 1), (1, 2), (2, 5), (3, 10)] {
            assert_eq!(d.coefficient_int(n).unwrap(), qi(v));
        }
        assert!(!t1.rational);
        assert_eq!(t1.c, qi(1));
        assert_eq!(t1.lie_rank, 1);
    }

    #[test]
    fn lattice_theory_a1() {
        let t = lattice_theory(&a1(), 10).unwrap();
        assert_eq!(t.c, qi(1));
        assert_eq!(t.lie_rank, 1);
        assert_eq!(t.module_count(), Some(2));
        let list = t.module_chars().unwrap();
        assert_eq!(list[0].weight, qi(0));
        assert_eq!(list[1].weight, q(1, 4));
        assert_eq!(list[1].dims.coefficient_int(0).unwrap(), qi(2));
        assert_eq!(t.lambda_min, qi(0));
        assert!(check_lattice_characterization(&t));
        assert_dims_wellformed(&t);
    }

    #[test]
    fn lattice_theory_e8_is_holomorphic() {
        let t = lattice_theory(&e8(), 6).unwrap();
        assert_eq!(t.module_count(), Some(1));
        assert_eq!(t.c, qi(8));
        assert!(check_lattice_characterization(&t));
        let dims = &t.module_chars().unwrap()[0].dims;
        // 8 oscillators + 240 roots at weight 1.
        assert_eq!(dims.coefficient_int(1).unwrap(), qi(248));
    }

    #[test]
    fn minimal_theories() {
        let ly = minimal_theory(2, 5, 8).unwrap();
        assert_eq!(ly.c, q(-22, 5));
        assert_eq!(ly.lambda_min, q(-1, 5));
        assert_eq!(ly.effective_central_charge(), q(2, 5));
        assert_eq!(ly.lie_rank, 0);
        assert_eq!(ly.module_count(), Some(2));
        assert_dims_wellformed(&ly);

        let ising = minimal_theory(3, 4, 8).unwrap();
        assert_eq!(ising.c, q(1, 2));
        assert_eq!(ising.effective_central_charge(), q(1, 2));
        assert!(!check_lattice_characterization(&ising));
        let vac = &ising.module_chars().unwrap()[ising.vacuum_index.unwrap()];
        assert_eq!(vac.weight, qi(0));
        assert_eq!(vac.dims.coefficient_int(1).unwrap(), qi(0));
    }

    #[test]
    fn moonshine_theory_data() {
        let t = moonshine_theory(6);
        assert_eq!(t.c, qi(24));
        assert_eq!(t.effective_central_charge(), qi(24));
        let dims = &t.module_chars().unwrap()[0].dims;
        assert_eq!(dims.coefficient_int(0).unwrap(), qi(1));
        assert_eq!(dims.coefficient_int(1).unwrap(), qi(0));
        assert_eq!(dims.coefficient_int(2).unwrap(), qi(196884));
        let z = t.full_character(0).unwrap();
        assert_eq!(z.lead(), qi(-1));
        assert_eq!(z.coefficient_int(1).unwrap(), qi(196884));
    }

    #[test]
    fn affine_examples() {
        let sl2_1 = affine_unitary_theory(3, 1, 2, 1).unwrap();
        assert_eq!(sl2_1.c, qi(1));
        assert_eq!(sl2_1.effective_central_charge(), qi(1));
        assert_eq!(sl2_1.lie_rank, 1);
        let sl2_2 = affine_unitary_theory(3, 1, 2, 2).unwrap();
        assert_eq!(sl2_2.c, q(3, 2));
        let e8_1 = affine_unitary_theory(248, 8, 30, 1).unwrap();
        assert_eq!(e8_1.c, qi(8));
        assert_eq!(e8_1.lie_rank, 8);
        assert!(affine_unitary_theory(3, 1, 2, 0).is_err());
        assert!(matches!(
            sl2_1.full_character(0),
            Err(Error::InvariantsOnly(_))
        ));
    }

    #[test]
    fn tensor_invariants_add() {
        let a = minimal_theory(2, 5, 8).unwrap();
        let b = moonshine_theory(8);
        let t = tensor(&a, &b, DEFAULT_MODULE_BOUND);
        assert_eq!(t.c, q(98, 5));
        assert_eq!(t.lambda_min, q(-1, 5));
        assert_eq!(t.lie_rank, 0);
        assert_eq!(t.module_count(), Some(2));
        assert_dims_wellformed(&t);
    }

    #[test]
    fn tensor_with_trivial_theory_is_identity() {
        let a = minimal_theory(2, 5, 8).unwrap();
        let triv = minimal_theory(2, 3, 8).unwrap();
        assert_eq!(triv.c, qi(0));
        assert_eq!(triv.module_count(), Some(1));
        let t = tensor(&a, &triv, DEFAULT_MODULE_BOUND);
        assert_eq!(t.c, a.c);
        assert_eq!(t.lambda_min, a.lambda_min);
        assert_eq!(t.lie_rank, a.lie_rank);
        let la = a.module_chars().unwrap();
        let lt = t.module_chars().unwrap();
        assert_eq!(la.len(), lt.len());
        for (ma, mt) in la.iter().zip(lt) {
            assert_eq!(ma.weight, mt.weight);
            assert!(ma.dims.agrees_with(&mt.dims));
        }
    }

    #[test]
    fn tensor_degrades_past_module_bound() {
        let a = minimal_theory(2, 5, 6).unwrap();
        let t = tensor(&a, &a, 3);
        assert_eq!(t.modules, ModuleSet::InvariantsOnly);
        assert_eq!(t.c, q(-44, 5));
        assert_eq!(t.lambda_min, q(-2, 5));
        assert!(t.vacuum_space_char.is_some());
    }

    #[test]
    fn large_tensor_power_invariants() {
        let vir = minimal_theory(2, 5, 6).unwrap();
        let moon = moonshine_theory(6);
        let big = tensor(
            &tensor_power(&vir, 60, DEFAULT_MODULE_BOUND),
            &tensor_power(&moon, 11, DEFAULT_MODULE_BOUND),
            DEFAULT_MODULE_BOUND,
        );
        assert_eq!(big.c, qi(0));
        assert_eq!(big.lie_rank, 0);
        assert_eq!(big.lambda_min, qi(-12));
        assert_eq!(big.effective_central_charge(), qi(288));
        assert_eq!(big.modules, ModuleSet::InvariantsOnly);
        assert!(!check_lattice_characterization(&big));
        let report = check_rank_bound(&big).unwrap();
        assert!(report.holds && report.positivity_ok);
    }

    #[test]
    fn small_tensor_power_stays_full() {
        let vir = minimal_theory(2, 5, 6).unwrap();
        let sq = tensor_power(&vir, 2, DEFAULT_MODULE_BOUND);
        assert_eq!(sq.module_count(), Some(4));
        assert_eq!(sq.c, q(-44, 5));
        let direct = tensor(&vir, &vir, DEFAULT_MODULE_BOUND);
        assert_eq!(
            sq.module_chars().unwrap().len(),
            direct.module_chars().unwrap().len()
        );
        // Weights sorted, vacuum tracked through the sort.
        let vac = sq.vacuum_index.unwrap();
        assert_eq!(sq.module_chars().unwrap()[vac].weight, qi(0));
        assert_eq!(sq.lambda_min, q(-2, 5));
    }

    #[test]
    fn rank_bound_reports() {
        for t in builtin_catalog(6).unwrap() {
            if !t.rational {
                assert!(matches!(check_rank_bound(&t), Err(Error::NotRational(_))));
                continue;
            }
            let r = check_rank_bound(&t).unwrap();
            assert!(r.holds, "{}", t.name);
            assert!(r.positivity_ok, "{}", t.name);
        }
        // sl2 level 1 is an equality case.
        let sl2 = affine_unitary_theory(3, 1, 2, 1).unwrap();
        let r = check_rank_bound(&sl2).unwrap();
        assert_eq!(r.lie_rank, r.c_tilde);
    }

    #[test]
    fn corrupted_theory_violates_rank_bound() {
        let mut t = minimal_theory(2, 5, 6).unwrap();
        t.lambda_min = qi(1);
        let r = check_rank_bound(&t).unwrap();
        assert!(!r.positivity_ok);
        assert!(!r.holds);
    }

    #[test]
    fn lattice_characterization_is_exact_on_catalog() {
        for t in builtin_catalog(6).unwrap() {
            // The level-1 simply-laced affine entries carry the signature
            // too: they realize the corresponding root lattice theories.
            // Vir(2,3) is the trivial theory, i.e. the rank-0 lattice theory.
            let expect = t.name.starts_with("Lat(")
                || t.name == "Aff(3,1,2,1)"
                || t.name == "Aff(248,8,30,1)"
                || t.name == "Vir(2,3)";
            assert_eq!(check_lattice_characterization(&t), expect, "{}", t.name);
        }
        // Free(1) has c = l = c_tilde = 1 numerically but is not rational,
        // so the characterization does not apply.
        assert!(!check_lattice_characterization(&free_boson(1, 4)));
    }

    #[test]
    fn vacuum_character_of_a1_is_theta_over_eta() {
        let prec = 12;
        let t = lattice_theory(&a1(), prec).unwrap();
        let z = t.vacuum_character().unwrap();
        let eta_inv = eta(prec).invert().unwrap();
        let direct = theta(&a1(), prec).mul(&eta_inv);
        assert!(z.agrees_with(&direct));
        assert_eq!(z.lead(), q(-1, 24));
    }

    #[test]
    fn ising_vacuum_lead_exponent() {
        let t = minimal_theory(3, 4, 8).unwrap();
        let z = t.vacuum_character().unwrap();
        assert_eq!(z.lead(), q(-1, 48));
    }

    #[test]
    fn vacuum_factorization_for_lattices_and_mixed_tensor() {
        let prec = 20;
        let a1t = lattice_theory(&a1(), prec).unwrap();
        assert!(verify_vacuum_factorization(&a1t, prec).unwrap());
        let e8t = lattice_theory(&e8(), prec).unwrap();
        assert!(verify_vacuum_factorization(&e8t, prec).unwrap());
        let mixed = tensor(
            &free_boson(1, prec),
            &minimal_theory(3, 4, prec).unwrap(),
            DEFAULT_MODULE_BOUND,
        );
        assert!(verify_vacuum_factorization(&mixed, prec).unwrap());
        let aff = affine_unitary_theory(3, 1, 2, 1).unwrap();
        assert!(matches!(
            verify_vacuum_factorization(&aff, prec),
            Err(Error::NoVacuumSpaceCharacter(_))
        ));
    }

    #[test]
    fn factorization_fails_on_corrupted_vacuum_space() {
        let prec = 12;
        let mut t = lattice_theory(&a1(), prec).unwrap();
        t.vacuum_space_char = Some(theta(&e8(), prec));
        assert!(!verify_vacuum_factorization(&t, prec).unwrap());
    }

    #[test]
    fn json_shape() {
        let t = minimal_theory(2, 5, 6).unwrap();
        let v = t.to_json();
        assert_eq!(v["c"], "-22/5");
        assert_eq!(v["c_tilde"], "2/5");
        assert_eq!(v["l"], 0);
        assert_eq!(v["flags"]["rational"], true);
        assert_eq!(v["modules"].as_array().unwrap().len(), 2);
        let aff = affine_unitary_theory(3, 1, 2, 1).unwrap();
        assert_eq!(aff.to_json()["modules"], "invariants-only");
    }

    #[test]
    fn builtin_catalog_is_wellformed() {
        let cat = builtin_catalog(6).unwrap();
        assert_eq!(cat.len(), 11);
        let big = cat.last().unwrap();
        assert_eq!(big.effective_central_charge(), qi(288));
        assert!(big.note.as_ref().unwrap().contains("528"));
        for t in &cat {
            if let ModuleSet::Full(_) = t.modules {
                assert_dims_wellformed(t);
                t.vacuum_character().unwrap();
            }
        }
    }
}
