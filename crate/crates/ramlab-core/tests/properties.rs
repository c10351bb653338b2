#[allow(dead_code)]
mod suites;

#[test]
fn psi_after_phi_is_identity() {
    suites::psi_after_phi().unwrap();
}

#[test]
fn hilbert_formula_on_random_profiles() {
    suites::hilbert_on_profiles().unwrap();
}

#[test]
fn ultrametric_and_additive() {
    suites::ultrametric_and_additive().unwrap();
}

#[test]
fn hensel_split_multiplies_back() {
    suites::hensel_split_product().unwrap();
}

#[test]
fn extraspecial_orders() {
    suites::extraspecial_orders().unwrap();
}

#[test]
fn hilbert_formula_on_cyclotomic_fields() {
    suites::hilbert_on_fields().unwrap();
}
