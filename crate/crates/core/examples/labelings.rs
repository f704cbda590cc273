//! Labeling catalogs for chains and forks, next to the closed-form table.
use alv::classify::{closed_form_profiles, component_profiles};
use alv::dynkin::{admissible_labelings, Component, DynkinType};

fn main() -> alv::Result<()> {
    for order in [2, 3] {
        println!("order {order}");
        let mut comps: Vec<Component> = (1..=19).map(Component::a).collect();
        comps.extend((4..=19).map(Component::d));
        for c in comps {
            let got = component_profiles(c, order);
            if got.is_empty() {
                continue;
            }
            let g = DynkinType::new(vec![c]).graph();
            let first = &admissible_labelings(&g, order)?[0];
            let table = closed_form_profiles(c, order).unwrap_or_default();
            let shown: Vec<String> = got.iter().map(|p| p.to_string()).collect();
            println!("  {:>4}  {:<40}  {}{}", c.to_string(), first.to_string(), shown.join(" "), if got == table { "" } else { "  (table differs)" });
        }
    }
    Ok(())
}
