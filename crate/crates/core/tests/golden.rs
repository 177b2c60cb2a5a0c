use oddjm::rational::Rational;
use oddjm::verify::wg_table_rows;
use oddjm::weingarten::{wg_exact, wg_formal_series, wg_series};

#[test]
fn published_rows_reproduce_exactly() {
    let rows = wg_table_rows().unwrap();
    assert_eq!(rows.len(), 28);
    for row in rows {
        let got = wg_series(row.n, &row.mu, row.signed.len() - 1)
            .unwrap()
            .signed_coefficients();
        assert_eq!(&got[..row.signed.len()], &row.signed[..], "{}", row.label());
    }
}

#[test]
fn formal_expansion_matches_series() {
    for row in wg_table_rows().unwrap().into_iter().filter(|r| r.n <= 4) {
        let formal = wg_formal_series(row.n, &row.mu, 4).unwrap();
        let series = wg_series(row.n, &row.mu, 4).unwrap().signed_coefficients();
        assert_eq!(&formal[..5], &series[..5], "{}", row.label());
    }
}

fn render(n: usize, big_n: usize) -> String {
    wg_exact(n, big_n)
        .unwrap()
        .coeffs()
        .iter()
        .map(|(k, v): (_, &Rational)| format!("{k}\t{v}\n"))
        .collect()
}

#[test]
fn formatted_output_is_stable() {
    let first = render(3, 5);
    assert_eq!(first, render(3, 5));
    assert_eq!(first.lines().count(), 3);
}
