use nalgebra::{Complex, DMatrix};

pub fn probe() -> bool {
    let m = DMatrix::<Complex<f64>>::identity(3, 3);
    let e = m.clone().exp();
    let svd = m.clone().svd(true, true);
    let se = nalgebra::SymmetricEigen::new(m.clone());
    let r = DMatrix::<f64>::identity(3, 3);
    let ev = r.complex_eigenvalues();
    e[(0, 0)].re > 0.0 && svd.singular_values[0] > 0.0 && se.eigenvalues[0] > 0.0 && ev[0].re > 0.0
}
