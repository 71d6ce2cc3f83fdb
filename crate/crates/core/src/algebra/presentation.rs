use std::fmt;

use super::{AlgebraError, Alphabet, DegLexOrder, Field, Polynomial};

/// Generators, deglex order and homogeneous defining relations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    order: DegLexOrder,
    field: Field,
    relations: Vec<Polynomial>,
}

impl Presentation {
    pub fn new(
        alphabet: Alphabet,
        field: Field,
        relations: Vec<Polynomial>,
    ) -> Result<Self, AlgebraError> {
        for (i, r) in relations.iter().enumerate() {
            if r.field() != field {
                return Err(AlgebraError::FieldMismatch {
                    left: field,
                    right: r.field(),
                });
            }
            if r.is_zero() {
                return Err(AlgebraError::ZeroRelation(i));
            }
            if !r.is_homogeneous() {
                return Err(AlgebraError::InhomogeneousRelation(i));
            }
            if r.degree() < 2 {
                return Err(AlgebraError::LowDegreeRelation {
                    index: i,
                    degree: r.degree(),
                });
            }
            for (w, _) in r.terms() {
                w.check_range(alphabet.len())?;
            }
        }
        Ok(Presentation {
            order: DegLexOrder::new(alphabet),
            field,
            relations,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.order.alphabet()
    }

    pub fn order(&self) -> &DegLexOrder {
        &self.order
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations.iter().map(Polynomial::degree).max().unwrap_or(0)
    }

    /// Applies the canonical map to every relation; relations that vanish
    /// modulo `p` are dropped.
    pub fn specialize_mod_p(&self, p: u64) -> Result<Presentation, AlgebraError> {
        let relations = self
            .relations
            .iter()
            .map(|r| r.specialize_mod_p(p))
            .filter(|r| !matches!(r, Ok(r) if r.is_zero()))
            .collect::<Result<Vec<_>, _>>()?;
        Presentation::new(self.alphabet().clone(), Field::prime(p)?, relations)
    }

    pub fn with_relations(&self, relations: Vec<Polynomial>) -> Result<Presentation, AlgebraError> {
        Presentation::new(self.alphabet().clone(), self.field, relations)
    }

    /// Text with relations sorted, independent of input order.
    pub fn canonical_text(&self) -> String {
        let mut rels: Vec<String> = self
            .relations
            .iter()
            .map(|r| r.display(self.alphabet()))
            .collect();
        rels.sort();
        render(self.alphabet(), self.field, &rels)
    }
}

fn render(alphabet: &Alphabet, field: Field, relations: &[String]) -> String {
    let mut out = format!("generators: {alphabet}\nfield: {field}\nrelations:\n");
    for r in relations {
        out.push_str(r);
        out.push('\n');
    }
    out
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|r| r.display(self.alphabet()))
            .collect();
        f.write_str(&render(self.alphabet(), self.field, &rels))
    }
}
