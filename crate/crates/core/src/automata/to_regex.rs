//! State elimination: renders a [`Dfa`] as a regular expression in the
//! syntax accepted by [`super::compile_regex`].

use std::collections::BTreeMap;

use super::Dfa;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Rx {
    Eps,
    Lit(u8),
    Cat(Vec<Rx>),
    Alt(Vec<Rx>),
    Star(Box<Rx>),
}

fn cat(a: Rx, b: Rx) -> Rx {
    let mut items = Vec::new();
    for r in [a, b] {
        match r {
            Rx::Eps => {}
            Rx::Cat(v) => items.extend(v),
            other => items.push(other),
        }
    }
    match items.len() {
        0 => Rx::Eps,
        1 => items.pop().unwrap(),
        _ => Rx::Cat(items),
    }
}

fn alt(a: Rx, b: Rx) -> Rx {
    let mut items = Vec::new();
    for r in [a, b] {
        match r {
            Rx::Alt(v) => items.extend(v),
            other => items.push(other),
        }
    }
    items.sort();
    items.dedup();
    if items.len() == 1 {
        items.pop().unwrap()
    } else {
        Rx::Alt(items)
    }
}

fn star(r: Rx) -> Rx {
    match r {
        Rx::Eps => Rx::Eps,
        s @ Rx::Star(_) => s,
        other => Rx::Star(Box::new(other)),
    }
}

fn render(r: &Rx, out: &mut String) {
    match r {
        Rx::Eps => out.push_str("eps"),
        Rx::Lit(a) => out.push(if *a == 0 { '0' } else { '1' }),
        Rx::Cat(items) => {
            for item in items {
                if matches!(item, Rx::Alt(_)) {
                    out.push('(');
                    render(item, out);
                    out.push(')');
                } else {
                    render(item, out);
                }
            }
        }
        Rx::Alt(items) => {
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push('|');
                }
                render(item, out);
            }
        }
        Rx::Star(inner) => {
            if matches!(**inner, Rx::Lit(_)) {
                render(inner, out);
            } else {
                out.push('(');
                render(inner, out);
                out.push(')');
            }
            out.push('*');
        }
    }
}

type Edges = BTreeMap<(usize, usize), Rx>;

fn add_edge(edges: &mut Edges, from: usize, to: usize, r: Rx) {
    let merged = match edges.remove(&(from, to)) {
        Some(old) => alt(old, r),
        None => r,
    };
    edges.insert((from, to), merged);
}

/// Regular expression for `L(dfa)`; `empty` for the empty language.
pub fn to_regex_string(dfa: &Dfa) -> String {
    let dfa = dfa.minimize();
    let live = dfa.live_states();
    if !live[dfa.start()] {
        return "empty".to_string();
    }
    let n = dfa.num_states();
    let (src, dst) = (n, n + 1);
    let mut edges: Edges = BTreeMap::new();
    add_edge(&mut edges, src, dfa.start(), Rx::Eps);
    for s in (0..n).filter(|&s| live[s]) {
        for a in 0..2u8 {
            let t = dfa.next(s, a);
            if live[t] {
                add_edge(&mut edges, s, t, Rx::Lit(a));
            }
        }
        if dfa.is_accepting(s) {
            add_edge(&mut edges, s, dst, Rx::Eps);
        }
    }
    let mut remaining: Vec<usize> = (0..n).filter(|&s| live[s]).collect();
    while !remaining.is_empty() {
        // eliminate the state with the fewest in*out edges
        let (pos, &k) = remaining
            .iter()
            .enumerate()
            .min_by_key(|(_, &k)| {
                let ins = edges.keys().filter(|&&(f, t)| t == k && f != k).count();
                let outs = edges.keys().filter(|&&(f, t)| f == k && t != k).count();
                (ins * outs, k)
            })
            .unwrap();
        remaining.swap_remove(pos);
        let self_loop = edges.remove(&(k, k)).map(star).unwrap_or(Rx::Eps);
        let ins: Vec<(usize, Rx)> = edges
            .iter()
            .filter(|(&(_, t), _)| t == k)
            .map(|(&(f, _), r)| (f, r.clone()))
            .collect();
        let outs: Vec<(usize, Rx)> = edges
            .iter()
            .filter(|(&(f, _), _)| f == k)
            .map(|(&(_, t), r)| (t, r.clone()))
            .collect();
        edges.retain(|&(f, t), _| f != k && t != k);
        for (f, rin) in &ins {
            for (t, rout) in &outs {
                let path = cat(cat(rin.clone(), self_loop.clone()), rout.clone());
                add_edge(&mut edges, *f, *t, path);
            }
        }
    }
    let mut out = String::new();
    render(&edges[&(src, dst)], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::super::compile_regex;
    use super::*;

    #[test]
    fn renders_re_parseable_equivalent_expressions() {
        for src in ["0*1", "eps", "(00|01)*11", "1(0|1)*", "(0|10)*11", "0*1(0|1)|1*0"] {
            let d = compile_regex(src).unwrap();
            let text = to_regex_string(&d);
            let back = compile_regex(&text).unwrap();
            assert_eq!(back, d, "{src} rendered as {text}");
        }
        assert_eq!(to_regex_string(&Dfa::empty()), "empty");
        assert_eq!(compile_regex("empty").unwrap(), Dfa::empty().minimize());
    }
}
