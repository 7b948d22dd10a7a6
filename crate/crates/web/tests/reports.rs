use neurocode_web::{analyze_boxes, analyze_circle, analyze_code};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).expect("valid json")
}

#[test]
fn circle_of_three_arcs() {
    let v = parse(&analyze_circle(360, &[0, 200, 120, 200, 240, 200]));
    assert_eq!(v["code"].as_array().unwrap().len(), 6);
    assert_eq!(v["nerve_equals_delta"], true);
    assert_eq!(v["topology"]["betti"], serde_json::json!([1, 1]));
    assert_eq!(v["topology"]["pi1_generators"], 1);
    assert_eq!(v["topology"]["pi1_relations"], 0);
    assert_eq!(v["topology"]["helly_lower_bound"], 2);

    let segs = v["segments"].as_array().unwrap();
    assert_eq!(segs.first().unwrap()["start"], 0);
    assert_eq!(segs.last().unwrap()["end"], 359);
    assert_eq!(segs[0]["word"], "101");
    assert_eq!(segs[0]["end"], 79);
    for pair in segs.windows(2) {
        assert_eq!(
            pair[0]["end"].as_u64().unwrap() + 1,
            pair[1]["start"].as_u64().unwrap()
        );
        assert_ne!(pair[0]["word"], pair[1]["word"]);
    }
}

#[test]
fn overlapping_rectangles_form_an_interval() {
    let v = parse(&analyze_boxes(6, 4, &[0, 0, 3, 3, 5, 3, 2, 0]));
    assert_eq!(v["patterns"].as_array().unwrap().len(), 24);
    assert_eq!(v["patterns"][0], "10");
    assert_eq!(v["patterns"][2], "11");
    assert_eq!(v["patterns"][5], "01");
    assert_eq!(v["nerve_equals_delta"], true);
    assert_eq!(v["topology"]["betti"], serde_json::json!([1, 0]));
    assert_eq!(v["topology"]["helly_lower_bound"], 0);
}

#[test]
fn uncovered_plane_points_have_the_zero_word() {
    let v = parse(&analyze_boxes(3, 3, &[0, 0, 0, 0]));
    assert_eq!(v["patterns"][0], "1");
    assert_eq!(v["patterns"][8], "0");
    assert_eq!(v["code"], serde_json::json!(["0", "1"]));
}

#[test]
fn code_report_for_a_hollow_triangle() {
    let v = parse(&analyze_code("110\n101\n011\n"));
    assert_eq!(v["length"], 3);
    assert_eq!(v["simplicial"], false);
    assert_eq!(v["completion"].as_array().unwrap().len(), 7);
    assert_eq!(v["topology"]["betti"], serde_json::json!([1, 1]));
    assert!(!v["canonical_form"].as_array().unwrap().is_empty());
    assert_eq!(
        v["canonical_form"].as_array().unwrap().len(),
        v["relations"].as_array().unwrap().len()
    );
}

#[test]
fn errors_are_reported_as_json() {
    let v = parse(&analyze_code("110\n1a0\n"));
    assert!(v["error"].as_str().unwrap().contains("line 2"));
    assert!(parse(&analyze_circle(2, &[0, 1]))["error"].is_string());
    assert!(parse(&analyze_circle(360, &[0]))["error"].is_string());
    assert!(parse(&analyze_boxes(4, 4, &[0, 0, 9, 9]))["error"].is_string());
    assert!(parse(&analyze_boxes(0, 4, &[]))["error"].is_string());
}
