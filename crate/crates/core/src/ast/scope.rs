//! Lexical scope and def-use analysis.
//!
//! The analysis is deliberately partial: any name it cannot tie to a
//! declaration inside the function is treated as external (globals, macros,
//! library functions, fields). Constructs it does not model are recorded in
//! [`ScopeInfo::unsupported`] instead of failing.

use super::{query, Language, NodeId, Span, SyntaxTree};
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScopeId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeclId(pub u32);

impl DeclId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone)]
pub struct ScopeRegion {
    pub node: NodeId,
    pub span: Span,
    pub parent: Option<ScopeId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeclKind {
    /// The analysed function's own name.
    Function,
    Parameter,
    Local,
}

#[derive(Debug, Clone)]
pub struct Declaration {
    pub name: String,
    /// The declaring identifier terminal.
    pub ident: NodeId,
    pub kind: DeclKind,
    pub scope: ScopeId,
    /// Enclosing declaration statement or parameter node.
    pub statement: NodeId,
    /// Outermost declarator node for this name (e.g. `init_declarator`).
    pub declarator: NodeId,
    pub type_node: Option<NodeId>,
    pub pointer_depth: u8,
    pub is_array: bool,
    /// Initializer expression, if present.
    pub value: Option<NodeId>,
    /// First byte offset at which the name is in scope.
    pub visible_from: usize,
}

#[derive(Debug, Clone)]
pub struct UseSite {
    pub name: String,
    pub ident: NodeId,
    pub scope: ScopeId,
    /// `None` when the name is external to the function.
    pub binding: Option<DeclId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unsupported {
    pub span: Span,
    pub reason: &'static str,
}

#[derive(Debug, Clone)]
pub struct ScopeInfo {
    language: Language,
    scopes: Vec<ScopeRegion>,
    decls: Vec<Declaration>,
    uses: Vec<UseSite>,
    decls_by_name: BTreeMap<String, Vec<DeclId>>,
    use_index: HashMap<NodeId, usize>,
    decl_index: HashMap<NodeId, DeclId>,
    unsupported: Vec<Unsupported>,
}

impl ScopeInfo {
    pub fn language(&self) -> Language {
        self.language
    }

    pub fn scopes(&self) -> &[ScopeRegion] {
        &self.scopes
    }

    pub fn declarations(&self) -> &[Declaration] {
        &self.decls
    }

    pub fn decl(&self, id: DeclId) -> &Declaration {
        &self.decls[id.index()]
    }

    pub fn decl_ids(&self) -> impl Iterator<Item = DeclId> + '_ {
        (0..self.decls.len() as u32).map(DeclId)
    }

    pub fn uses(&self) -> &[UseSite] {
        &self.uses
    }

    pub fn unsupported(&self) -> &[Unsupported] {
        &self.unsupported
    }

    /// Declarations of `name`, in source order.
    pub fn declarations_named(&self, name: &str) -> &[DeclId] {
        self.decls_by_name.get(name).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Every identifier node bound to `decl`, excluding the declaring identifier.
    pub fn uses_of(&self, decl: DeclId) -> Vec<NodeId> {
        self.uses
            .iter()
            .filter(|u| u.binding == Some(decl))
            .map(|u| u.ident)
            .collect()
    }

    pub fn use_at(&self, ident: NodeId) -> Option<&UseSite> {
        self.use_index.get(&ident).map(|&i| &self.uses[i])
    }

    /// The declaration an identifier node refers to, whether it is a use or
    /// the declaring occurrence itself.
    pub fn binding_of(&self, ident: NodeId) -> Option<DeclId> {
        if let Some(&d) = self.decl_index.get(&ident) {
            return Some(d);
        }
        self.use_at(ident).and_then(|u| u.binding)
    }

    /// Innermost scope whose region contains `offset`.
    pub fn scope_at(&self, offset: usize) -> ScopeId {
        let mut best = ScopeId(0);
        let mut best_len = usize::MAX;
        for (i, s) in self.scopes.iter().enumerate() {
            if (s.span.contains(offset) || s.span.end == offset && i == 0) && s.span.len() <= best_len
            {
                best = ScopeId(i as u32);
                best_len = s.span.len();
            }
        }
        best
    }

    fn resolve_in(&self, name: &str, mut scope: ScopeId, offset: usize) -> Option<DeclId> {
        let candidates = self.decls_by_name.get(name)?;
        loop {
            let found = candidates
                .iter()
                .copied()
                .filter(|&d| {
                    let decl = &self.decls[d.index()];
                    decl.scope == scope && decl.visible_from <= offset
                })
                .max_by_key(|&d| self.decls[d.index()].visible_from);
            if found.is_some() {
                return found;
            }
            scope = self.scopes[scope.0 as usize].parent?;
        }
    }

    /// The declaration `name` resolves to at byte `offset`, if any.
    pub fn resolve(&self, name: &str, offset: usize) -> Option<DeclId> {
        self.resolve_in(name, self.scope_at(offset), offset)
    }

    /// Whether `name` refers to a declaration of this function at `offset`.
    pub fn reachable(&self, name: &str, offset: usize) -> bool {
        self.resolve(name, offset).is_some()
    }

    /// Declarations visible at `offset`, one per name (innermost wins).
    pub fn visible_at(&self, offset: usize) -> Vec<DeclId> {
        let mut out: Vec<DeclId> = self
            .decls_by_name
            .keys()
            .filter_map(|name| self.resolve(name, offset))
            .collect();
        out.sort();
        out
    }

    /// Binding signature used to compare def-use structure across renamings:
    /// for every use in source order, the ordinal of its declaration (or
    /// the external name).
    pub fn binding_signature(&self) -> Vec<Result<usize, String>> {
        self.uses
            .iter()
            .map(|u| match u.binding {
                Some(d) => Ok(d.index()),
                None => Err(u.name.clone()),
            })
            .collect()
    }
}

/// Analyses the function at the tree root.
pub fn scope_of(tree: &SyntaxTree) -> ScopeInfo {
    let mut b = Builder {
        tree,
        scopes: Vec::new(),
        decls: Vec::new(),
        raw_uses: Vec::new(),
        unsupported: Vec::new(),
        function_name: None,
    };
    let global = b.push_scope(tree.root(), None);
    b.scopes[0].span = Span::new(0, tree.source().len());
    b.walk_root(global);
    b.finish()
}

struct Builder<'t> {
    tree: &'t SyntaxTree,
    scopes: Vec<ScopeRegion>,
    decls: Vec<Declaration>,
    raw_uses: Vec<(NodeId, ScopeId)>,
    unsupported: Vec<Unsupported>,
    function_name: Option<String>,
}

struct DeclaratorInfo {
    ident: Option<NodeId>,
    pointer_depth: u8,
    is_array: bool,
    is_prototype: bool,
}

impl<'t> Builder<'t> {
    fn push_scope(&mut self, node: NodeId, parent: Option<ScopeId>) -> ScopeId {
        self.scopes.push(ScopeRegion {
            node,
            span: self.tree.span(node),
            parent,
        });
        ScopeId(self.scopes.len() as u32 - 1)
    }

    fn unsupported(&mut self, node: NodeId, reason: &'static str) {
        self.unsupported.push(Unsupported {
            span: self.tree.span(node),
            reason,
        });
    }

    #[allow(clippy::too_many_arguments)]
    fn declare(
        &mut self,
        ident: NodeId,
        kind: DeclKind,
        scope: ScopeId,
        statement: NodeId,
        declarator: NodeId,
        type_node: Option<NodeId>,
        pointer_depth: u8,
        is_array: bool,
        value: Option<NodeId>,
    ) {
        let visible_from = if kind == DeclKind::Function {
            0
        } else {
            self.tree.span(ident).end
        };
        self.decls.push(Declaration {
            name: self.tree.text(ident).to_string(),
            ident,
            kind,
            scope,
            statement,
            declarator,
            type_node,
            pointer_depth,
            is_array,
            value,
            visible_from,
        });
    }

    fn walk_root(&mut self, global: ScopeId) {
        let t = self.tree;
        let root = t.root();
        let func = match query::function_node(t) {
            Some(f) => f,
            None => {
                self.walk(root, global);
                return;
            }
        };
        if func != root {
            // template_declaration: template parameters are types
            self.unsupported(root, "template parameters");
        }
        self.walk_function(func, global, true);
    }

    fn walk_function(&mut self, func: NodeId, outer: ScopeId, is_root: bool) {
        let t = self.tree;
        let fscope = self.push_scope(func, Some(outer));
        match t.language() {
            Language::C | Language::Cpp => {
                let mut declarator = t.child_by_field(func, "declarator");
                // Peel pointer/reference declarators around the function declarator.
                while let Some(d) = declarator {
                    if t.kind(d) == "function_declarator" {
                        break;
                    }
                    declarator = t
                        .child_by_field(d, "declarator")
                        .or_else(|| t.named_children(d).last());
                }
                if let Some(fd) = declarator {
                    if let Some(name) = t.child_by_field(fd, "declarator") {
                        if is_root && t.kind(name) == "identifier" {
                            self.function_name = Some(t.text(name).to_string());
                            self.declare(name, DeclKind::Function, outer, func, fd, t.child_by_field(func, "type"), 0, false, None);
                        }
                    }
                    if let Some(params) = t.child_by_field(fd, "parameters") {
                        self.declare_c_params(params, fscope);
                    }
                }
            }
            Language::Java => {
                if let Some(name) = t.child_by_field(func, "name") {
                    if is_root {
                        self.function_name = Some(t.text(name).to_string());
                        self.declare(name, DeclKind::Function, outer, func, func, t.child_by_field(func, "type"), 0, false, None);
                    }
                }
                if let Some(params) = t.child_by_field(func, "parameters") {
                    self.declare_java_params(params, fscope);
                }
            }
        }
        if let Some(body) = t.child_by_field(func, "body") {
            self.walk(body, fscope);
        }
    }

    fn declare_c_params(&mut self, params: NodeId, scope: ScopeId) {
        let t = self.tree;
        for p in t.named_children(params).collect::<Vec<_>>() {
            match t.kind(p) {
                "parameter_declaration" | "optional_parameter_declaration" => {
                    let type_node = t.child_by_field(p, "type");
                    if let Some(d) = t.child_by_field(p, "declarator") {
                        let info = self.declarator_info(d);
                        if let Some(ident) = info.ident {
                            self.declare(ident, DeclKind::Parameter, scope, p, d, type_node, info.pointer_depth, info.is_array, None);
                        }
                        self.walk_declarator_extras(d, scope);
                    }
                    if let Some(v) = t.child_by_field(p, "default_value") {
                        self.walk(v, scope);
                    }
                }
                "variadic_parameter" | "..." => {}
                _ => self.unsupported(p, "parameter form"),
            }
        }
    }

    fn declare_java_params(&mut self, params: NodeId, scope: ScopeId) {
        let t = self.tree;
        match t.kind(params) {
            "identifier" => {
                self.declare(params, DeclKind::Parameter, scope, params, params, None, 0, false, None);
                return;
            }
            "inferred_parameters" => {
                for p in t.named_children(params).collect::<Vec<_>>() {
                    if t.kind(p) == "identifier" {
                        self.declare(p, DeclKind::Parameter, scope, p, p, None, 0, false, None);
                    }
                }
                return;
            }
            _ => {}
        }
        for p in t.named_children(params).collect::<Vec<_>>() {
            match t.kind(p) {
                "formal_parameter" | "catch_formal_parameter" => {
                    if let Some(name) = t.child_by_field(p, "name") {
                        let type_node = t.child_by_field(p, "type");
                        let is_array = t.child_by_field(p, "dimensions").is_some()
                            || type_node.map(|ty| t.kind(ty) == "array_type").unwrap_or(false);
                        self.declare(name, DeclKind::Parameter, scope, p, p, type_node, 0, is_array, None);
                    }
                }
                "spread_parameter" => {
                    let type_node = t.named_children(p).find(|&c| t.kind(c) != "variable_declarator" && t.kind(c) != "modifiers");
                    if let Some(vd) = t.child_of_kind(p, "variable_declarator") {
                        if let Some(name) = t.child_by_field(vd, "name") {
                            self.declare(name, DeclKind::Parameter, scope, p, vd, type_node, 0, true, None);
                        }
                    }
                }
                "receiver_parameter" => {}
                _ => self.unsupported(p, "parameter form"),
            }
        }
    }

    /// Finds the declared identifier inside a C/C++ declarator.
    fn declarator_info(&self, mut d: NodeId) -> DeclaratorInfo {
        let t = self.tree;
        let mut info = DeclaratorInfo {
            ident: None,
            pointer_depth: 0,
            is_array: false,
            is_prototype: false,
        };
        let mut saw_function = false;
        loop {
            match t.kind(d) {
                "identifier" => {
                    info.ident = Some(d);
                    break;
                }
                "init_declarator" => match t.child_by_field(d, "declarator") {
                    Some(next) => d = next,
                    None => break,
                },
                "pointer_declarator" => {
                    info.pointer_depth = info.pointer_depth.saturating_add(1);
                    match t.child_by_field(d, "declarator") {
                        Some(next) => d = next,
                        None => break,
                    }
                }
                "array_declarator" => {
                    info.is_array = true;
                    match t.child_by_field(d, "declarator") {
                        Some(next) => d = next,
                        None => break,
                    }
                }
                "function_declarator" => {
                    saw_function = true;
                    match t.child_by_field(d, "declarator") {
                        Some(next) => d = next,
                        None => break,
                    }
                }
                "parenthesized_declarator" | "reference_declarator" | "attributed_declarator" => {
                    match t.named_children(d).find(|&c| !matches!(t.kind(c), "attribute_declaration")) {
                        Some(next) => d = next,
                        None => break,
                    }
                }
                _ => break,
            }
        }
        // `int g(int);` declares a function; `int (*g)(int)` declares a pointer variable.
        if saw_function && info.pointer_depth == 0 {
            info.is_prototype = true;
        }
        info
    }

    /// Walks expressions nested in a declarator (array sizes) as uses.
    fn walk_declarator_extras(&mut self, d: NodeId, scope: ScopeId) {
        let t = self.tree;
        for n in t.descendants(d).collect::<Vec<_>>() {
            if t.kind(n) == "array_declarator" {
                if let Some(size) = t.child_by_field(n, "size") {
                    self.walk(size, scope);
                }
            }
        }
    }

    fn walk_c_declaration(&mut self, decl: NodeId, scope: ScopeId) {
        let t = self.tree;
        let is_extern = t
            .children(decl)
            .iter()
            .any(|&c| t.kind(c) == "storage_class_specifier" && t.text(c) == "extern");
        let type_node = t.child_by_field(decl, "type");
        if let Some(ty) = type_node {
            if t.contains_kind(ty, &["field_declaration_list", "enumerator_list"]) {
                self.unsupported(ty, "local type definition");
            } else {
                self.walk(ty, scope);
            }
        }
        // C++ condition declarations carry their initializer on the declaration.
        let direct_value = t.child_by_field(decl, "value");
        for d in t.children_by_field(decl, "declarator").collect::<Vec<_>>() {
            let info = self.declarator_info(d);
            let value = if t.kind(d) == "init_declarator" {
                t.child_by_field(d, "value")
            } else {
                direct_value
            };
            match info.ident {
                Some(ident) if !info.is_prototype && !is_extern => {
                    self.declare(ident, DeclKind::Local, scope, decl, d, type_node, info.pointer_depth, info.is_array, value);
                }
                Some(_) if is_extern => self.unsupported(d, "local extern declaration"),
                Some(_) => self.unsupported(d, "local function declaration"),
                None => self.unsupported(d, "declarator form"),
            }
            self.walk_declarator_extras(d, scope);
            if let Some(v) = value {
                self.walk(v, scope);
            }
        }
    }

    fn walk_java_declaration(&mut self, decl: NodeId, scope: ScopeId) {
        let t = self.tree;
        let type_node = t.child_by_field(decl, "type");
        for d in t.children_by_field(decl, "declarator").collect::<Vec<_>>() {
            let Some(name) = t.child_by_field(d, "name") else {
                self.unsupported(d, "declarator form");
                continue;
            };
            let is_array = t.child_by_field(d, "dimensions").is_some()
                || type_node.map(|ty| t.kind(ty) == "array_type").unwrap_or(false);
            let value = t.child_by_field(d, "value");
            self.declare(name, DeclKind::Local, scope, decl, d, type_node, 0, is_array, value);
            if let Some(v) = value {
                self.walk(v, scope);
            }
        }
    }

    fn walk_children(&mut self, id: NodeId, scope: ScopeId) {
        for c in self.tree.children(id).to_vec() {
            self.walk(c, scope);
        }
    }

    fn walk(&mut self, id: NodeId, scope: ScopeId) {
        let t = self.tree;
        let kind = t.kind(id);
        if kind.starts_with("preproc_") {
            self.unsupported(id, "preprocessor directive");
            return;
        }
        match kind {
            "identifier" => self.raw_uses.push((id, scope)),
            "compound_statement" | "block" | "switch_block" | "switch_block_statement_group" => {
                let s = self.push_scope(id, Some(scope));
                self.walk_children(id, s);
            }
            "for_statement" | "while_statement" | "if_statement" | "switch_statement" => {
                let s = self.push_scope(id, Some(scope));
                self.walk_children(id, s);
            }
            "for_range_loop" => {
                let s = self.push_scope(id, Some(scope));
                let type_node = t.child_by_field(id, "type");
                if let Some(d) = t.child_by_field(id, "declarator") {
                    let info = self.declarator_info(d);
                    if let Some(ident) = info.ident {
                        self.declare(ident, DeclKind::Local, s, id, d, type_node, info.pointer_depth, info.is_array, None);
                    }
                }
                for f in ["right", "body"] {
                    if let Some(c) = t.child_by_field(id, f) {
                        self.walk(c, s);
                    }
                }
            }
            "enhanced_for_statement" => {
                let s = self.push_scope(id, Some(scope));
                if let Some(v) = t.child_by_field(id, "value") {
                    self.walk(v, scope);
                }
                if let Some(name) = t.child_by_field(id, "name") {
                    let type_node = t.child_by_field(id, "type");
                    self.declare(name, DeclKind::Local, s, id, name, type_node, 0, false, None);
                }
                if let Some(b) = t.child_by_field(id, "body") {
                    self.walk(b, s);
                }
            }
            "catch_clause" => {
                let s = self.push_scope(id, Some(scope));
                if let Some(params) = t.child_by_field(id, "parameters") {
                    self.declare_c_params(params, s);
                } else if let Some(p) = t.child_of_kind(id, "catch_formal_parameter") {
                    if let Some(name) = t.child_by_field(p, "name") {
                        self.declare(name, DeclKind::Parameter, s, p, p, None, 0, false, None);
                    }
                }
                if let Some(b) = t.child_by_field(id, "body") {
                    self.walk(b, s);
                }
            }
            "lambda_expression" => {
                let s = self.push_scope(id, Some(scope));
                match t.language() {
                    Language::Java => {
                        if let Some(p) = t.child_by_field(id, "parameters") {
                            self.declare_java_params(p, s);
                        }
                    }
                    _ => {
                        if let Some(c) = t.child_by_field(id, "captures") {
                            self.walk_children(c, scope);
                        }
                        if let Some(d) = t.child_by_field(id, "declarator") {
                            if let Some(p) = t.child_by_field(d, "parameters") {
                                self.declare_c_params(p, s);
                            }
                        }
                    }
                }
                if let Some(b) = t.child_by_field(id, "body") {
                    self.walk(b, s);
                }
            }
            "declaration" => self.walk_c_declaration(id, scope),
            "local_variable_declaration" => self.walk_java_declaration(id, scope),
            "resource" => {
                if let (Some(name), Some(value)) = (t.child_by_field(id, "name"), t.child_by_field(id, "value")) {
                    self.walk(value, scope);
                    self.declare(name, DeclKind::Local, scope, id, id, t.child_by_field(id, "type"), 0, false, Some(value));
                } else {
                    self.walk_children(id, scope);
                }
            }
            "function_definition" | "method_declaration" | "constructor_declaration" => {
                self.unsupported(id, "nested function");
                self.walk_function(id, scope, false);
            }
            "class_body" | "field_declaration_list" | "enumerator_list" | "class_specifier"
            | "struct_specifier" | "union_specifier" | "enum_specifier" | "local_class_declaration"
            | "class_declaration" | "record_declaration" | "interface_declaration"
            | "enum_declaration" => {
                if t.named_children(id).any(|c| matches!(t.kind(c), "field_declaration_list" | "enumerator_list" | "class_body"))
                    || matches!(kind, "class_body" | "field_declaration_list" | "enumerator_list")
                {
                    self.unsupported(id, "local type definition");
                }
                if kind == "class_body" {
                    let s = self.push_scope(id, Some(scope));
                    for c in t.named_children(id).collect::<Vec<_>>() {
                        match t.kind(c) {
                            "field_declaration" => self.walk_java_declaration(c, s),
                            "method_declaration" | "constructor_declaration" => self.walk_function(c, s, false),
                            _ => self.walk(c, s),
                        }
                    }
                }
            }
            "type_definition" => self.unsupported(id, "local typedef"),
            "labeled_statement" => {
                for c in t.children(id).to_vec() {
                    if t.node(c).field == Some("label") || (t.kind(c) == "identifier" && t.language() == Language::Java) {
                        continue;
                    }
                    self.walk(c, scope);
                }
            }
            "break_statement" | "continue_statement" => {}
            "field_expression" => {
                if let Some(arg) = t.child_by_field(id, "argument") {
                    self.walk(arg, scope);
                }
            }
            "field_access" => {
                if let Some(obj) = t.child_by_field(id, "object") {
                    self.walk(obj, scope);
                }
            }
            "method_invocation" => {
                match t.child_by_field(id, "object") {
                    Some(obj) => self.walk(obj, scope),
                    None => {
                        if let Some(name) = t.child_by_field(id, "name") {
                            if self.function_name.as_deref() == Some(t.text(name)) {
                                self.raw_uses.push((name, scope));
                            }
                        }
                    }
                }
                if let Some(args) = t.child_by_field(id, "arguments") {
                    self.walk(args, scope);
                }
            }
            "method_reference" => {
                if let Some(first) = t.named_children(id).next() {
                    self.walk(first, scope);
                }
            }
            "instanceof_expression" => {
                if let Some(left) = t.child_by_field(id, "left") {
                    self.walk(left, scope);
                }
                if let Some(name) = t.child_by_field(id, "name") {
                    self.unsupported(id, "pattern binding");
                    self.declare(name, DeclKind::Local, scope, id, name, t.child_by_field(id, "right"), 0, false, None);
                }
            }
            "enumerator" => {
                if let Some(v) = t.child_by_field(id, "value") {
                    self.walk(v, scope);
                }
            }
            "qualified_identifier" | "scoped_identifier" | "template_function" | "template_method"
            | "annotation" | "marker_annotation" | "using_declaration" | "alias_declaration"
            | "namespace_identifier" | "destructor_name" | "operator_name" | "goto_statement" => {}
            _ => self.walk_children(id, scope),
        }
    }

    fn finish(self) -> ScopeInfo {
        let t = self.tree;
        let mut decls_by_name: BTreeMap<String, Vec<DeclId>> = BTreeMap::new();
        let mut decl_index = HashMap::new();
        for (i, d) in self.decls.iter().enumerate() {
            decls_by_name.entry(d.name.clone()).or_default().push(DeclId(i as u32));
            decl_index.insert(d.ident, DeclId(i as u32));
        }
        let mut info = ScopeInfo {
            language: t.language(),
            scopes: self.scopes,
            decls: self.decls,
            uses: Vec::new(),
            decls_by_name,
            use_index: HashMap::new(),
            decl_index,
            unsupported: self.unsupported,
        };
        let mut raw = self.raw_uses;
        raw.sort_by_key(|(n, _)| t.span(*n).start);
        raw.dedup_by_key(|(n, _)| *n);
        for (ident, scope) in raw {
            if info.decl_index.contains_key(&ident) {
                continue;
            }
            let name = t.text(ident).to_string();
            let binding = info.resolve_in(&name, scope, t.span(ident).start);
            info.use_index.insert(ident, info.uses.len());
            info.uses.push(UseSite {
                name,
                ident,
                scope,
                binding,
            });
        }
        info
    }
}

/// Block-level local declaration statements whose initializers (if any) have
/// no side effects and reference no local variable or parameter.
pub fn independent_decls(tree: &SyntaxTree, scope: &ScopeInfo) -> Vec<NodeId> {
    let mut statements: Vec<NodeId> = scope
        .declarations()
        .iter()
        .filter(|d| d.kind == DeclKind::Local && query::is_declaration_statement(tree.kind(d.statement)))
        .filter(|d| {
            tree.parent(d.statement)
                .map(|p| query::is_block(tree.kind(p)))
                .unwrap_or(false)
        })
        .map(|d| d.statement)
        .collect();
    statements.dedup();
    statements
        .into_iter()
        .filter(|&stmt| {
            let own: Vec<NodeId> = scope
                .declarations()
                .iter()
                .filter(|d| d.statement == stmt)
                .map(|d| d.ident)
                .collect();
            query::is_pure(tree, stmt)
                && tree.descendants(stmt).all(|n| {
                    if tree.kind(n) != "identifier" || own.contains(&n) {
                        return true;
                    }
                    match scope.binding_of(n) {
                        Some(d) => scope.decl(d).kind == DeclKind::Function,
                        None => true,
                    }
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::{parse, SourceFunction};

    fn analyse(lang: Language, src: &str) -> (SyntaxTree, ScopeInfo) {
        let tree = parse(&SourceFunction::new("s", lang, src)).unwrap();
        let info = scope_of(&tree);
        (tree, info)
    }

    fn offset_of(src: &str, needle: &str) -> usize {
        src.find(needle).unwrap_or_else(|| panic!("{needle} not in {src}"))
    }

    #[test]
    fn block_nesting() {
        let src = "void f(){ int a; { int b; b = a; } a = 1; }";
        let (_, info) = analyse(Language::C, src);
        let inner = offset_of(src, "b = a");
        let outer = offset_of(src, "a = 1");
        assert!(info.reachable("a", inner));
        assert!(info.reachable("b", inner));
        assert!(!info.reachable("b", outer));
    }

    #[test]
    fn loop_header_scope_ends_with_loop() {
        let src = "int f(){ int s = 0; for(int i=0;;){ s = i; break; } return s; }";
        let (_, info) = analyse(Language::C, src);
        assert!(info.reachable("i", offset_of(src, "s = i")));
        assert!(!info.reachable("i", offset_of(src, "return s")));
    }

    #[test]
    fn parameters_visible_throughout_body() {
        let src = "TFStatus Eval(TfContext* context, TfNode* node){ int k = 0; if (k) { return Check(context, node); } return 0; }";
        let (_, info) = analyse(Language::C, src);
        for site in ["int k", "return Check", "return 0"] {
            let at = offset_of(src, site);
            assert!(info.reachable("context", at), "context at {site}");
            assert!(info.reachable("node", at), "node at {site}");
        }
        let ctx = info.declarations_named("context")[0];
        assert_eq!(info.decl(ctx).pointer_depth, 1);
        assert_eq!(info.decl(ctx).kind, DeclKind::Parameter);
    }

    #[test]
    fn declaration_order_matters() {
        let src = "void f(){ x = 1; int x; x = 2; }";
        let (_, info) = analyse(Language::C, src);
        assert!(!info.reachable("x", offset_of(src, "x = 1")));
        assert!(info.reachable("x", offset_of(src, "x = 2")));
        let ext = info.uses().iter().find(|u| u.name == "x").unwrap();
        assert!(ext.binding.is_none());
    }

    #[test]
    fn shadowing_binds_to_innermost() {
        let src = "void f(int x){ { int x = 3; x++; } x--; }";
        let (_, info) = analyse(Language::C, src);
        let decls = info.declarations_named("x");
        assert_eq!(decls.len(), 2);
        assert_eq!(info.uses_of(decls[0]).len(), 1);
        assert_eq!(info.uses_of(decls[1]).len(), 1);
    }

    #[test]
    fn fields_calls_and_labels_are_not_variables() {
        let src = "int f(struct s *p){ int n = p->n; g(n); goto out; out: return f(p); }";
        let (_, info) = analyse(Language::C, src);
        let names: Vec<_> = info.uses().iter().map(|u| u.name.as_str()).collect();
        assert!(!names.contains(&"out"));
        let g = info.uses().iter().find(|u| u.name == "g").unwrap();
        assert!(g.binding.is_none());
        let rec = info.uses().iter().find(|u| u.name == "f").unwrap();
        assert_eq!(info.decl(rec.binding.unwrap()).kind, DeclKind::Function);
        // p->n: only `p` is a use, the field is not
        assert_eq!(info.uses().iter().filter(|u| u.name == "n").count(), 1);
    }

    #[test]
    fn java_scopes() {
        let src = "int sum(int[] xs) { int t = 0; for (int x : xs) { t += x; } lbl: for (int i = 0; i < 3; i++) { continue lbl; } return this.t + helper(t); }";
        let (_, info) = analyse(Language::Java, src);
        assert!(info.reachable("xs", offset_of(src, "return")));
        assert!(!info.reachable("x", offset_of(src, "return")));
        assert!(info.uses().iter().all(|u| u.name != "lbl" && u.name != "helper"));
        // this.t is a field access: only one `t` use resolves from the return line
        let t_decl = info.declarations_named("t")[0];
        assert_eq!(info.uses_of(t_decl).len(), 2);
    }

    #[test]
    fn cpp_lambda_and_range_for() {
        let src = "int f(std::vector<int>& v){ int n = 2; auto l = [&v, n](int a){ return a + n; }; for (auto& x : v) { n += x; } return l(n); }";
        let (_, info) = analyse(Language::Cpp, src);
        let n = info.declarations_named("n")[0];
        assert_eq!(info.uses_of(n).len(), 4);
        assert_eq!(info.declarations_named("a").len(), 1);
        assert_eq!(info.declarations_named("x").len(), 1);
    }

    #[test]
    fn independent_declarations() {
        let (tree, info) = analyse(Language::C, "void f(){ int x; int y = 0; }");
        assert_eq!(independent_decls(&tree, &info).len(), 2);
        let (tree, info) = analyse(Language::C, "void f(){ int x = 1; int y = x; }");
        let got = independent_decls(&tree, &info);
        assert_eq!(got.len(), 1);
        assert_eq!(tree.text(got[0]), "int x = 1;");
        let (tree, info) = analyse(Language::C, "void f(){ int x = g(); }");
        assert!(independent_decls(&tree, &info).is_empty());
    }

    #[test]
    fn local_prototypes_and_externs_are_recorded() {
        let (_, info) = analyse(Language::C, "void f(){ int g(int); extern int h; h = g(1); }");
        assert!(info.declarations().iter().all(|d| d.name != "g" && d.name != "h"));
        assert_eq!(info.unsupported().len(), 2);
    }

    #[test]
    fn function_pointer_local_is_a_variable() {
        let (_, info) = analyse(Language::C, "void f(){ int (*fp)(int) = g; fp(1); }");
        let fp = info.declarations_named("fp")[0];
        assert_eq!(info.decl(fp).pointer_depth, 1);
        assert_eq!(info.uses_of(fp).len(), 1);
    }
}
