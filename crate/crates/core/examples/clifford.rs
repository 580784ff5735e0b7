//! Clifford structure on the second fundamental form of the Severi
//! varieties: kernel directions act on T/S by φ_w with φ_w² scalar.

use secdef::certify::Certifier;
use secdef::defect::{self, CliffordFrame};
use secdef::jets::{chart_at, second_fundamental_form};
use secdef::linalg::{Matrix, Scalar, Stream};
use secdef::zoo;

fn main() -> secdef::Result<()> {
    let cert = Certifier::default();
    for name in ["severi_C", "severi_H", "severi_O"] {
        let e = zoo::by_name(name)?;
        let s = second_fundamental_form(&chart_at(&e.map, &e.base_point, 3)?);
        let st = Stream::new(0);
        let p = s.certified_profile(&st, &cert)?;
        let v = s.generic_vector(&p, p.bound, 32, &mut st.derive_named("v"))?;
        let vtx = defect::vertex(&s, &st.derive_named("vertex"), &cert)?;
        let Some(verdict) = defect::clifford_verdict(&s, &v, &p, &vtx)? else {
            println!("{name}: not applicable");
            continue;
        };
        println!(
            "{name}: Cl({}) on a module of dim {}, sign {:+}, relation holds {}",
            verdict.kernel_dim, verdict.module_dim, verdict.sign, verdict.relation_holds
        );
        let frame = CliffordFrame::new(&s, &v)?;
        let q = defect::q_v(&s, &v, &defect::minimal_subsystem(&vtx))?;
        let id = Matrix::identity(frame.module_dim());
        let kernel = s.kernel_at(&v).basis_vectors();
        let phi: Vec<Matrix> = kernel.iter().map(|w| frame.action(&s, w)).collect::<secdef::Result<_>>()?;
        for i in 0..phi.len() {
            for j in i..phi.len() {
                // φ_i φ_j + φ_j φ_i = −2 s Q_v(w_i, w_j)
                let anti = phi[i].mul(&phi[j]).add(&phi[j].mul(&phi[i]));
                let want = id.scale(&(&Scalar::from_int(-2 * i64::from(verdict.sign)) * &q[(i + 1, j + 1)]));
                assert_eq!(anti, want);
            }
        }
        println!("  checked {} anticommutators", phi.len() * (phi.len() + 1) / 2);
    }
    Ok(())
}
