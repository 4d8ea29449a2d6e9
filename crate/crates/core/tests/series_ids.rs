use realgw::arith::rational::rat;
use realgw::series_ids::*;

#[test]
fn coefficient_examples() {
    assert_eq!(coeff_real(0, 4, 1).unwrap(), rat(1, 24));
    assert_eq!(coeff_real(0, 4, 2).unwrap(), rat(1, 1920));
    assert_eq!(coeff_real(3, 8, 0).unwrap(), rat(1, 1));
    assert!(coeff_real(0, 3, 1).is_err());
    assert_eq!(coeff_cx(0, 4, 1), rat(-1, 12));
    assert_eq!(coeff_cx(0, 4, 2), rat(1, 360));
    assert_eq!(coeff_hat(2, 12, 0), rat(1, 1));
    assert_eq!(coeff_hat(0, 4, 1), rat(1, 24));
    assert_eq!(coeff_hat(0, 4, 2), rat(1, 1920));
}

#[test]
fn identities_to_t4() {
    for id in Identity::ALL {
        let r = verify_identity(id, 4).unwrap();
        assert!(r.pass, "{r}");
    }
}

#[test]
fn identities_to_t6() {
    for id in Identity::ALL {
        let r = verify_identity(id, 6).unwrap();
        assert!(r.pass, "{r}");
    }
    for c in Conjecture::ALL {
        let r = check_conjecture(c, 6, 2).unwrap();
        println!("{r}");
    }
}
