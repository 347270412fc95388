//! Conic bundle structures on `S5`.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use super::Configuration;
use crate::labels::CurveLabel;
use crate::lattice::LatticeVector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConicFibration {
    pub class: LatticeVector,
    /// Unordered pairs of table curves summing to the fiber class.
    pub decompositions: Vec<(CurveLabel, CurveLabel)>,
}

/// All `φ = dH - Σ a_k E_k` with `φ² = 0`, `φ·(-K) = 2` and `φ·E ≥ 0` for
/// every table curve. From `d² = Σ a_k²` and `3d - Σ a_k = 2`, Cauchy-Schwarz
/// gives `(3d - 2)² <= 4d²`, so `d <= 2` and `|a_k| <= d`; the box searched
/// below is strictly larger.
pub fn find_conic_fibrations(c: &Configuration) -> Vec<ConicFibration> {
    let l = c.lattice();
    let minus_k = c.canonical_class().neg();
    let r = -4i64..=4;
    let mut out = Vec::new();
    for d in 0..=4i64 {
        for a1 in r.clone() {
            for a2 in r.clone() {
                for a3 in r.clone() {
                    for a4 in r.clone() {
                        let phi = LatticeVector::from_i64(&[d, -a1, -a2, -a3, -a4]);
                        let ok = l.norm(&phi).is_ok_and(|n| n == BigInt::from(0))
                            && l.pairing(&phi, &minus_k).is_ok_and(|p| p == BigInt::from(2))
                            && c.curves()
                                .iter()
                                .all(|e| l.pairing(&phi, &e.class).is_ok_and(|p| !p.is_negative()));
                        if ok {
                            out.push(ConicFibration {
                                decompositions: decompositions(c, &phi),
                                class: phi,
                            });
                        }
                    }
                }
            }
        }
    }
    out.sort_by(|x, y| x.class.cmp(&y.class));
    out
}

fn decompositions(c: &Configuration, phi: &LatticeVector) -> Vec<(CurveLabel, CurveLabel)> {
    let curves = c.curves();
    let mut out = Vec::new();
    for (i, a) in curves.iter().enumerate() {
        for b in &curves[i + 1..] {
            if &a.class.add(&b.class) == phi {
                out.push((a.label.clone(), b.label.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blowup::build_s5;

    fn names(f: &ConicFibration) -> Vec<String> {
        f.decompositions.iter().map(|(a, b)| format!("{a}+{b}")).collect()
    }

    #[test]
    fn five_conic_bundles_with_three_singular_fibers_each() {
        let s5 = build_s5();
        let all = find_conic_fibrations(&s5);
        assert_eq!(all.len(), 5);
        assert!(all.iter().all(|f| f.decompositions.len() == 3));

        let h_e4 = s5.formal_sum(&[(1, "H"), (-1, "E4")]).unwrap();
        let f = all.iter().find(|f| f.class == h_e4).unwrap();
        assert_eq!(names(f), ["E(01)+E(23)", "E(02)+E(13)", "E(03)+E(12)"]);

        let conic = s5.formal_sum(&[(2, "H"), (-1, "E1"), (-1, "E2"), (-1, "E3"), (-1, "E4")]).unwrap();
        let f = all.iter().find(|f| f.class == conic).unwrap();
        assert_eq!(names(f), ["E(12)+E(34)", "E(13)+E(24)", "E(14)+E(23)"]);
    }
}
