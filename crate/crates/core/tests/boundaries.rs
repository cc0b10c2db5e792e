use detkrs::krs::{krs_inverse_monomial, krs_monomial};
use detkrs::verify::is_nested;
use detkrs::{Bitableau, Minor, PositionMonomial, Shape, Tableau};

fn minor(rows: &[usize], cols: &[usize]) -> Minor {
    Minor::new(rows.to_vec(), cols.to_vec()).unwrap()
}

fn diagonal_product(b: &Bitableau, m: usize, n: usize) -> PositionMonomial {
    let positions: Vec<(usize, usize)> = b.minors().iter().flat_map(Minor::diagonal).collect();
    PositionMonomial::from_positions(m, n, &positions).unwrap()
}

#[test]
fn prefix_nested_rows_give_diagonal_product() {
    let b = Bitableau::from_minors(vec![minor(&[1, 3], &[1, 2]), minor(&[1], &[3])]);
    assert!(b.is_standard());
    assert!(is_nested(&b.left));
    assert_eq!(krs_monomial(&b, 3, 3).unwrap(), diagonal_product(&b, 3, 3));
}

#[test]
fn subset_nested_rows_can_differ_from_diagonal_product() {
    let b = Bitableau::from_minors(vec![minor(&[1, 3], &[1, 2]), minor(&[2], &[2])]);
    assert!(b.is_standard());
    assert!(!is_nested(&b.left));
    assert!(!is_nested(&b.right));
    assert!(b.right.rows[1].iter().all(|x| b.right.rows[0].contains(x)));
    let krs = krs_monomial(&b, 3, 3).unwrap();
    assert_eq!(
        krs,
        PositionMonomial::from_positions(3, 3, &[(3, 2), (2, 1), (1, 2)]).unwrap()
    );
    assert_eq!(
        diagonal_product(&b, 3, 3),
        PositionMonomial::from_positions(3, 3, &[(1, 1), (3, 2), (2, 2)]).unwrap()
    );
    assert_ne!(krs, diagonal_product(&b, 3, 3));
    assert_eq!(krs_inverse_monomial(&krs), b);
}

#[test]
fn nesting_is_a_prefix_condition() {
    assert!(is_nested(&Tableau::new(vec![
        vec![1, 2, 4],
        vec![1, 2],
        vec![1]
    ])));
    assert!(!is_nested(&Tableau::new(vec![vec![1, 2], vec![2]])));
}

#[test]
fn gamma_needs_every_row_in_the_tradeoff() {
    let s = Shape::new(vec![1, 1]).unwrap();
    let t = 1;
    let over = |ks: std::ops::RangeInclusive<usize>| {
        ks.map(|k| s.alpha(k) as i64 - (k as i64) * (t as i64 - 1))
            .max()
            .unwrap()
    };
    assert_eq!(s.gamma(t), 2);
    assert_eq!(over(1..=t), 1);
    assert_eq!(over(1..=s.len()), 2);
}
