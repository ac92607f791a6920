//! Sylvester's double sum, computed term by term over all subset pairs.

use itertools::Itertools;

use crate::arith::{Rat, UniPoly};
use crate::error::{Error, Result};
use crate::linalg::{r_product, RootList};

/// A sublist together with its complement, both in parent order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetSelection {
    pub indices: Vec<usize>,
    pub chosen: Vec<Rat>,
    pub complement: Vec<Rat>,
    /// `(-1)^j`, `j` the number of transpositions taking the parent list to
    /// `chosen ∪ complement`.
    pub sign: i8,
}

/// All selections of `size` elements of `list`, in lexicographic order of
/// the chosen index sets.
pub fn enumerate_subsets(
    list: &RootList,
    size: usize,
) -> Result<impl Iterator<Item = SubsetSelection> + '_> {
    if size > list.len() {
        return Err(Error::Domain(format!(
            "subset size {size} exceeds list length {}",
            list.len()
        )));
    }
    let values = list.values();
    Ok((0..values.len()).combinations(size).map(move |indices| {
        // moving the t-th chosen element (at position i) to slot t costs i - t
        // adjacent transpositions
        let inversions: usize = indices.iter().enumerate().map(|(t, &i)| i - t).sum();
        let chosen = indices.iter().map(|&i| values[i].clone()).collect();
        let complement = (0..values.len())
            .filter(|i| !indices.contains(i))
            .map(|i| values[i].clone())
            .collect();
        SubsetSelection {
            indices,
            chosen,
            complement,
            sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
        }
    }))
}

struct Side {
    sel: SubsetSelection,
    poly: UniPoly,
    inner: Rat,
}

fn sides(list: &RootList, size: usize) -> Result<Vec<Side>> {
    enumerate_subsets(list, size)?
        .map(|sel| {
            let inner = r_product(&sel.chosen, &sel.complement);
            if inner.is_zero() {
                return Err(Error::CorruptedInput(
                    "zero denominator in double sum; list has repeated values".to_string(),
                ));
            }
            let poly = UniPoly::from_roots(&sel.chosen);
            Ok(Side { sel, poly, inner })
        })
        .collect()
}

/// `Sylv^{p,q}(A, B; x)` together with the number of summed terms.
pub fn sylvester_double_sum_counted(
    a: &RootList,
    b: &RootList,
    p: usize,
    q: usize,
) -> Result<(UniPoly, usize)> {
    let (m, n) = (a.len(), b.len());
    if m == 0 || n == 0 {
        return Err(Error::Domain("double sum needs nonempty A and B".to_string()));
    }
    if p > m || q > n {
        return Err(Error::Domain(format!(
            "(p, q) = ({p}, {q}) out of range for |A| = {m}, |B| = {n}"
        )));
    }
    let a_sides = sides(a, p)?;
    let b_sides = sides(b, q)?;
    let mut total = UniPoly::zero();
    let mut terms = 0;
    for sa in &a_sides {
        for sb in &b_sides {
            let numer = &r_product(&sa.sel.chosen, &sb.sel.chosen)
                * &r_product(&sa.sel.complement, &sb.sel.complement);
            terms += 1;
            if numer.is_zero() {
                continue;
            }
            let coeff = numer.checked_div(&(&sa.inner * &sb.inner))?;
            total = &total + &(&sa.poly * &sb.poly).scale(&coeff);
        }
    }
    Ok((total, terms))
}

/// `Sylv^{p,q}(A, B; x)`: the sum over `A' ⊂ A`, `B' ⊂ B` with `|A'| = p`,
/// `|B'| = q` of
/// `R(x,A') R(x,B') R(A',B') R(A'',B'') / (R(A',A'') R(B',B''))`.
pub fn sylvester_double_sum(a: &RootList, b: &RootList, p: usize, q: usize) -> Result<UniPoly> {
    sylvester_double_sum_counted(a, b, p, q).map(|(value, _)| value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots(v: &[i64]) -> RootList {
        RootList::from_ints(v).unwrap()
    }

    #[test]
    fn singletons_of_a_pair() {
        let l = roots(&[1, 2]);
        let sels: Vec<_> = enumerate_subsets(&l, 1).unwrap().collect();
        assert_eq!(sels.len(), 2);
        assert_eq!(sels[0].chosen, vec![Rat::from(1)]);
        assert_eq!(sels[0].complement, vec![Rat::from(2)]);
        assert_eq!(sels[0].sign, 1);
        assert_eq!(sels[1].chosen, vec![Rat::from(2)]);
        assert_eq!(sels[1].complement, vec![Rat::from(1)]);
        assert_eq!(sels[1].sign, -1);
    }

    #[test]
    fn empty_selection() {
        let l = roots(&[1, 2, 3]);
        let sels: Vec<_> = enumerate_subsets(&l, 0).unwrap().collect();
        assert_eq!(sels.len(), 1);
        assert!(sels[0].chosen.is_empty());
        assert_eq!(sels[0].complement.len(), 3);
        assert_eq!(sels[0].sign, 1);
        assert!(enumerate_subsets(&l, 4).is_err());
    }

    #[test]
    fn selection_sign_matches_permutation_parity() {
        // brute force: count inversions of the concatenated index sequence
        let l = roots(&[1, 2, 3, 4, 5]);
        for size in 0..=5 {
            for sel in enumerate_subsets(&l, size).unwrap() {
                let mut perm = sel.indices.clone();
                perm.extend((0..5).filter(|i| !sel.indices.contains(i)));
                let inv = (0..5)
                    .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                    .filter(|&(i, j)| perm[i] > perm[j])
                    .count();
                assert_eq!(sel.sign, if inv % 2 == 0 { 1 } else { -1 });
            }
        }
    }

    #[test]
    fn double_sum_examples() {
        let a = roots(&[2]);
        let b = roots(&[3]);
        assert_eq!(sylvester_double_sum(&a, &b, 0, 0).unwrap(), UniPoly::from_ints(&[-1]));

        let a = roots(&[1, 2]);
        let b = roots(&[3, 4]);
        assert_eq!(sylvester_double_sum(&a, &b, 1, 1).unwrap(), UniPoly::from_ints(&[14, -10, 2]));
        assert_eq!(sylvester_double_sum(&a, &b, 1, 0).unwrap(), UniPoly::from_ints(&[-10, 4]));
    }

    #[test]
    fn term_count() {
        let a = roots(&[1, 2, 3, 4]);
        let b = roots(&[5, 6, 7, 8, 9]);
        let (_, terms) = sylvester_double_sum_counted(&a, &b, 2, 3).unwrap();
        assert_eq!(terms, 6 * 10);
    }

    #[test]
    fn full_selection_is_resultant_times_fg() {
        let a = roots(&[1, -2]);
        let b = roots(&[3, 5, 7]);
        let res = r_product(a.values(), b.values());
        let expected = (&a.poly() * &b.poly()).scale(&res);
        assert_eq!(sylvester_double_sum(&a, &b, 2, 3).unwrap(), expected);
    }

    #[test]
    fn overlap_between_lists_is_allowed() {
        let a = roots(&[1, 2]);
        let b = roots(&[2, 3]);
        assert!(sylvester_double_sum(&a, &b, 1, 1).is_ok());
    }

    #[test]
    fn range_errors() {
        let a = roots(&[1]);
        let b = roots(&[2]);
        assert!(matches!(sylvester_double_sum(&a, &b, 2, 0), Err(Error::Domain(_))));
        assert!(matches!(sylvester_double_sum(&a, &b, 0, 2), Err(Error::Domain(_))));
        assert!(sylvester_double_sum(&RootList::empty(), &b, 0, 0).is_err());
    }
}
