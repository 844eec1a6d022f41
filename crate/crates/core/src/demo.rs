//! The two worked constructions: a weighted Shamir scheme over GF(5) for the
//! structure `{A, BC}`, and two independent (2,2) Shamir schemes over GF(3)
//! for `{AB, CD}`.

use crate::error::Result;
use crate::lattice::UpSet;
use crate::schemes::{self, AccessStructure, Scheme, ThresholdClause};
use crate::states::StatePair;

/// Four shares of a threshold-2 scheme over GF(5); A holds two of them.
pub fn example5_scheme() -> Result<Scheme> {
    schemes::weighted_threshold_scheme(3, &[2, 1, 1], 2, 5)
}

pub fn example5_structure() -> Result<AccessStructure> {
    Ok(AccessStructure::new(UpSet::from_labels(&["A", "BC"], 3)?))
}

pub fn example5_pair() -> Result<StatePair> {
    example5_scheme()?.state_pair()
}

/// Clause α shares between A and B, clause β between C and D, each a (2,2)
/// Shamir scheme over GF(3). Registers for clauses a party takes no part in
/// are omitted.
pub fn example6_scheme() -> Result<Scheme> {
    schemes::threshold_hierarchy(
        4,
        &[
            ThresholdClause {
                allocation: vec![1, 1, 0, 0],
                threshold: 2,
                prime: 3,
            },
            ThresholdClause {
                allocation: vec![0, 0, 1, 1],
                threshold: 2,
                prime: 3,
            },
        ],
    )
}

pub fn example6_structure() -> Result<AccessStructure> {
    Ok(AccessStructure::new(UpSet::from_labels(&["AB", "CD"], 4)?))
}

pub fn example6_pair() -> Result<StatePair> {
    example6_scheme()?.state_pair()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::SubsetMask;
    use crate::states::{self, ratio};

    fn atoms(d: &states::JointDistribution) -> Vec<String> {
        d.atoms().map(|(x, _)| x.iter().map(u32::to_string).collect()).collect()
    }

    #[test]
    fn example5_tables_and_marginals() {
        let s = example5_scheme().unwrap();
        assert_eq!(atoms(s.table(0)), ["0000", "1234", "2413", "3142", "4321"]);
        assert_eq!(atoms(s.table(1)), ["0432", "1111", "2340", "3024", "4203"]);

        let pair = example5_pair().unwrap();
        let a = SubsetMask::from_label("A", 3).unwrap();
        let rho_a = pair.rho.marginal(a).unwrap();
        assert_eq!(atoms(&rho_a), ["00", "12", "24", "31", "43"]);
        assert!(rho_a.atoms().all(|(_, p)| *p == ratio(1, 5)));
        let sigma_a = pair.sigma.marginal(a).unwrap();
        assert_eq!(sigma_a.support_size(), 10);
        assert!(sigma_a.atoms().all(|(_, p)| *p == ratio(1, 10)));
        for extra in ["11", "23", "30", "42", "04"] {
            assert!(atoms(&sigma_a).contains(&extra.to_string()));
        }

        let b = SubsetMask::from_label("B", 3).unwrap();
        let rho_b = pair.rho.marginal(b).unwrap();
        assert_eq!(rho_b, pair.sigma.marginal(b).unwrap());
        assert_eq!(rho_b.support_size(), 5);
        assert!(rho_b.atoms().all(|(_, p)| *p == ratio(1, 5)));
    }

    #[test]
    fn example6_tables_and_marginals() {
        let s = example6_scheme().unwrap();
        assert_eq!(
            atoms(s.table(0)),
            ["0000", "0012", "0021", "1200", "1212", "1221", "2100", "2112", "2121"]
        );
        assert_eq!(
            atoms(s.table(1)),
            ["0202", "0211", "0220", "1102", "1111", "1120", "2002", "2011", "2020"]
        );
        let pair = example6_pair().unwrap();
        let ab = SubsetMask::from_label("AB", 4).unwrap();
        let rho_ab = pair.rho.marginal(ab).unwrap();
        assert_eq!(atoms(&rho_ab), ["00", "12", "21"]);
        assert!(rho_ab.atoms().all(|(_, p)| *p == ratio(1, 3)));
        let sigma_ab = pair.sigma.marginal(ab).unwrap();
        assert_eq!(atoms(&sigma_ab), ["00", "02", "11", "12", "20", "21"]);
        assert!(sigma_ab.atoms().all(|(_, p)| *p == ratio(1, 6)));

        let bc = SubsetMask::from_label("BC", 4).unwrap();
        assert_eq!(pair.rho.marginal(bc).unwrap(), pair.sigma.marginal(bc).unwrap());
    }

    #[test]
    fn schemes_pass_audit() {
        let r = schemes::verify_scheme(&example5_scheme().unwrap(), &example5_structure().unwrap());
        assert!(r.unwrap().passed());
        let r = schemes::verify_scheme(&example6_scheme().unwrap(), &example6_structure().unwrap());
        assert!(r.unwrap().passed());
    }
}
