use tauto_core::catalog::{gkz, quadric_cone, segre_cone, veronese_gl};
use tauto_core::instance::Instance;
use tauto_core::rational::{rat, ratio};
use tauto_core::Error;

fn load(name: &str) -> Instance {
    let path = format!("{}/../../instances/{name}.json", env!("CARGO_MANIFEST_DIR"));
    Instance::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn bundled_instances_match_builders() {
    for (name, (rep, y)) in [
        ("quadric_cone", quadric_cone().unwrap()),
        ("segre", segre_cone().unwrap()),
        ("veronese_2_2", veronese_gl(2, 2).unwrap()),
        ("gkz", gkz(&[vec![1, 1, 1], vec![0, 1, 2]]).unwrap()),
        ("gkz_identity", gkz(&[vec![1, 0], vec![0, 1]]).unwrap()),
    ] {
        let inst = load(name);
        let (r, o) = inst.system().unwrap();
        assert_eq!(r, &rep, "{name}");
        assert!(o.ideal.same_ideal(&y.ideal).unwrap(), "{name}");
        assert_eq!(o.dim_y, y.dim_y);
        assert_eq!(o.ci_degrees, y.ci_degrees);
        let again = Instance::from_json(&inst.to_json()).unwrap();
        assert_eq!(again.to_json(), inst.to_json());
    }
    assert_eq!(load("quadric_cone").character("beta_half").unwrap().get(0), &ratio(1, 2));
}

#[test]
fn lfd_instance() {
    let l = load("lfd_synthetic").lfd.unwrap();
    assert_eq!(l.n, 3);
    assert_eq!(l.roots_bd, vec![rat(-1), ratio(-2, 3)]);
    assert_eq!(l.beta_values.len(), 6);
}

#[test]
fn malformed_bracket_is_located() {
    let text = std::fs::read_to_string(format!(
        "{}/../../instances/quadric_cone.json",
        env!("CARGO_MANIFEST_DIR")
    ))
    .unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["lie"]["brackets"][0][2] = serde_json::json!(["0", "0", "2"]);
    match Instance::from_json(&v) {
        Err(Error::Validation(msg)) => assert!(msg.contains("(1,2)"), "{msg}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn rejects_empty_instances() {
    assert!(Instance::parse("{\"name\": \"x\"}").is_err());
    assert!(matches!(Instance::parse("[1"), Err(Error::Parse(_))));
}
