use qls_web::api;
use serde_json::Value;

#[test]
fn plan_lists_every_cardinality() {
    let rows: Value = serde_json::from_str(&api::plan(5).unwrap()).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 21);
    assert_eq!(rows[1]["status"], "excluded");
    assert!(api::plan(40).is_err());
}

#[test]
fn construct_then_verify() {
    let built: Value = serde_json::from_str(&api::construct(6, 10).unwrap()).unwrap();
    assert_eq!(built["measured"], 10);
    assert_eq!(built["class_of"].as_array().unwrap().len(), 36);
    let doc = built["document"].to_string();
    let checked: Value = serde_json::from_str(&api::verify(&doc).unwrap()).unwrap();
    assert_eq!(checked["valid"], true);
    assert_eq!(checked["cardinality"], 10);

    let mut broken = built["document"].clone();
    broken["entries"][2][2] = broken["entries"][2][3].clone();
    let checked: Value = serde_json::from_str(&api::verify(&broken.to_string()).unwrap()).unwrap();
    assert_eq!(checked["valid"], false);
    assert!(api::verify("not json").is_err());
    assert!(api::construct(8, 9).unwrap_err().contains("v + 1"));
}
