//! Depth-first enumeration of fixed-length words over a small alphabet with
//! a pruning transition function.  Backs the path and permutation
//! generators; restartable and lazy, so Catalan-sized sweeps never
//! materialize the full list.

/// Iterator over all words `w` of length `len` over `alphabet` such that
/// every prefix state (threaded through `trans`) is defined and the final
/// state satisfies `accept`.
///
/// `trans(state, symbol, pos, len)` returns the state after appending
/// `symbol` at position `pos`, or `None` to prune the branch.
pub(crate) struct WordGen<S, St, F, A> {
    len: usize,
    alphabet: Vec<S>,
    trans: F,
    accept: A,
    choices: Vec<usize>,
    states: Vec<St>,
    pending: usize,
    done: bool,
}

impl<S, St, F, A> WordGen<S, St, F, A>
where
    S: Copy,
    St: Clone,
    F: Fn(&St, S, usize, usize) -> Option<St>,
    A: Fn(&St) -> bool,
{
    pub(crate) fn new(len: usize, alphabet: Vec<S>, init: St, trans: F, accept: A) -> Self {
        WordGen {
            len,
            alphabet,
            trans,
            accept,
            choices: Vec::with_capacity(len),
            states: vec![init],
            pending: 0,
            done: false,
        }
    }

    fn backtrack(&mut self) {
        match self.choices.pop() {
            Some(c) => {
                self.states.pop();
                self.pending = c + 1;
            }
            None => self.done = true,
        }
    }
}

impl<S, St, F, A> Iterator for WordGen<S, St, F, A>
where
    S: Copy,
    St: Clone,
    F: Fn(&St, S, usize, usize) -> Option<St>,
    A: Fn(&St) -> bool,
{
    type Item = Vec<S>;

    fn next(&mut self) -> Option<Vec<S>> {
        while !self.done {
            let depth = self.choices.len();
            if depth == self.len {
                let ok = (self.accept)(self.states.last().unwrap());
                let word = if ok {
                    Some(self.choices.iter().map(|&c| self.alphabet[c]).collect())
                } else {
                    None
                };
                self.backtrack();
                if word.is_some() {
                    return word;
                }
                continue;
            }
            let mut advanced = false;
            for ci in self.pending..self.alphabet.len() {
                let sym = self.alphabet[ci];
                if let Some(st) = (self.trans)(self.states.last().unwrap(), sym, depth, self.len) {
                    self.choices.push(ci);
                    self.states.push(st);
                    self.pending = 0;
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                self.backtrack();
            }
        }
        None
    }
}
