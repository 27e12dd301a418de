use cuhl_demo::{gap_table_value, GridDemo};

#[test]
fn grid_queries_match_dijkstra() {
    for grid_aware in [true, false] {
        let d = GridDemo::new(6, 5, 7, grid_aware).unwrap();
        let n = 30;
        for s in 0..n {
            for t in 0..n {
                let q = d.query_value(s, t);
                assert_eq!(q["distance"], q["dijkstra"], "{s} {t}");
                let hub = q["hub"].as_u64().unwrap();
                assert!(q["common_hubs"].as_array().unwrap().iter().any(|h| h.as_u64() == Some(hub)));
            }
        }
    }
}

#[test]
fn summary_reports_grid_shape_and_bound() {
    let d = GridDemo::new(8, 8, 1, true).unwrap();
    let s = d.summary_value();
    assert_eq!(s["n"], 64);
    assert_eq!(s["m"], 112);
    assert_eq!(s["label_sizes"].as_array().unwrap().len(), 64);
    assert!(s["l_max"].as_u64().unwrap() <= s["l_max_bound"].as_u64().unwrap());
    assert!(!s["separators"].as_array().unwrap().is_empty());
}

#[test]
fn label_lists_hubs_with_distances() {
    let d = GridDemo::new(3, 3, 2, true).unwrap();
    let l = d.label_value(0);
    let hubs = l["hubs"].as_array().unwrap();
    assert_eq!(hubs.len(), l["distances"].as_array().unwrap().len());
    let self_pos = hubs.iter().position(|h| h.as_u64() == Some(0)).unwrap();
    assert_eq!(l["distances"][self_pos], 0);
    assert!(d.label_value(9).get("error").is_some());
    assert!(d.query_value(0, 9).get("error").is_some());
}

#[test]
fn gap_table_rows() {
    let rows = gap_table_value("2, 4").unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1]["k"], 4);
    assert_eq!(rows[1]["n"], 21);
    assert_eq!(rows[1]["cover_ok"], true);
    assert!(gap_table_value("x").is_err());
    assert!(gap_table_value("0").is_err());
    assert!(gap_table_value("17").is_err());
}
