use gorenstein_wasm::{classify_circulant_json, quartic_grid_json, sqc_json};

#[test]
fn classify_reports_verdict_and_prediction() {
    let v = classify_circulant_json(13, "1,5", "all").unwrap();
    assert_eq!(v["spec"], "C_13(1,5)");
    assert_eq!(v["verdict"]["gorenstein"], true);
    assert_eq!(v["prediction"], "gorenstein");
    assert_eq!(v["graph"]["edges"].as_array().unwrap().len(), 26);

    let v = classify_circulant_json(8, "1 2", "2").unwrap();
    assert_eq!(v["verdict"]["w2"], true);
    assert_eq!(v["prediction"], "w2-only");

    let v = classify_circulant_json(9, "1,2,3", "0").unwrap();
    assert_eq!(v["prediction"], "gorenstein");

    let v = classify_circulant_json(10, "2,5", "all").unwrap();
    assert_eq!(v["prediction"], "not-gorenstein");
}

#[test]
fn classify_rejects_bad_input() {
    assert!(classify_circulant_json(8, "5", "all").is_err());
    assert!(classify_circulant_json(8, "x", "all").is_err());
    assert!(classify_circulant_json(8, "1", "4").is_err());
    assert!(classify_circulant_json(30, "1", "all").is_err());
}

#[test]
fn sqc_accepts_edge_lists_and_graph6() {
    let v = sqc_json("0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    assert_eq!(v["partition"]["fiveCycles"], serde_json::json!([[0, 1, 2, 3, 4]]));
    assert_eq!(v["sqcGorenstein"], true);
    assert_eq!(v["engineGorenstein"], true);

    let v = sqc_json("Dhc").unwrap();
    assert_eq!(v["graph"]["n"], 5);
    assert_eq!(v["sqcGorenstein"], true);

    let v = sqc_json("n=7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n").unwrap();
    assert!(v["partition"].is_null());
    assert_eq!(v["sqcGorenstein"], "graph is not in the SQC class");
}

#[test]
fn quartic_grid_matches_the_closed_form() {
    for n in 5..=14 {
        let v = quartic_grid_json(n).unwrap();
        for cell in v["cells"].as_array().unwrap() {
            assert_eq!(cell["predicted"], cell["observed"], "n = {n}: {cell}");
        }
    }
    assert!(quartic_grid_json(4).is_err());
}
