use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = ">")]
    Greater,
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = "==")]
    Equal,
    #[serde(rename = "!=")]
    NotEqual,
}

impl Relation {
    fn holds(self, lhs: Rational, rhs: Rational) -> bool {
        match self {
            Relation::Greater => lhs > rhs,
            Relation::AtLeast => lhs >= rhs,
            Relation::Less => lhs < rhs,
            Relation::AtMost => lhs <= rhs,
            Relation::Equal => lhs == rhs,
            Relation::NotEqual => lhs != rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Greater => ">",
            Relation::AtLeast => ">=",
            Relation::Less => "<",
            Relation::AtMost => "<=",
            Relation::Equal => "==",
            Relation::NotEqual => "!=",
        }
    }
}

/// One exact inequality in a checklist.
///
/// `margin` is always `lhs - rhs`, so the sign tells how far the condition
/// is from its boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub id: String,
    pub statement: String,
    pub relation: Relation,
    pub lhs: Rational,
    pub rhs: Rational,
    pub margin: Rational,
    pub holds: bool,
}

impl Condition {
    pub fn new(
        id: impl Into<String>,
        statement: impl Into<String>,
        lhs: Rational,
        relation: Relation,
        rhs: Rational,
    ) -> Self {
        Condition {
            id: id.into(),
            statement: statement.into(),
            relation,
            lhs,
            rhs,
            margin: lhs - rhs,
            holds: relation.holds(lhs, rhs),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: {} {} {} ({})",
            if self.holds { "ok" } else { "FAIL" },
            self.statement,
            self.lhs,
            self.relation.symbol(),
            self.rhs,
            self.id
        )
    }
}

/// First failing condition, if any.
pub fn first_failure(conditions: &[Condition]) -> Option<&Condition> {
    conditions.iter().find(|c| !c.holds)
}
