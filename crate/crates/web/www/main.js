import init, { truth_table, evaluate_in_model, godel_report, default_system } from "./pkg/vacuity_web.js";

const $ = (id) => document.getElementById(id);

function cell(text, cls) {
  const td = document.createElement("td");
  td.textContent = text;
  if (cls) td.className = cls;
  return td;
}

function fail(out, message) {
  out.replaceChildren();
  const p = document.createElement("p");
  p.textContent = "error: " + message;
  out.append(p);
}

function showTable() {
  const out = $("prop-out");
  const r = JSON.parse(truth_table($("prop").value));
  if (r.error) return fail(out, r.error);
  const table = document.createElement("table");
  const head = document.createElement("tr");
  for (const a of [...r.atoms, "classical", "gap"]) {
    const th = document.createElement("th");
    th.textContent = a;
    head.append(th);
  }
  table.append(head);
  for (const row of r.rows) {
    const tr = document.createElement("tr");
    for (const v of row.assignment) tr.append(cell(v ? "T" : "F"));
    const c = row.classical ? "T" : "F";
    tr.append(cell(c, c), cell(row.value, row.value));
    table.append(tr);
  }
  const verdict = document.createElement("p");
  verdict.textContent = r.truth_relevant_tautology
    ? "truth-relevant tautology"
    : "not a truth-relevant tautology";
  out.replaceChildren(table, verdict);
}

function showModel() {
  const out = $("fol-out");
  const r = JSON.parse(evaluate_in_model($("model").value, $("fol").value));
  if (r.error) return fail(out, r.error);
  const pre = document.createElement("pre");
  pre.textContent = `classical: ${r.classical}\npresuppositional: ${r.presup}` +
    (r.reason ? ` (${r.reason})` : "");
  out.replaceChildren(pre);
}

function showGodel() {
  const out = $("godel-out");
  const r = JSON.parse(godel_report($("system").value, Number($("max-n").value) || 0));
  if (r.error) return fail(out, r.error);
  const fp = r.fixed_point;
  const summary = document.createElement("pre");
  summary.textContent = [
    `U = ${fp.u}`,
    `k = ${fp.k}`,
    `<G> = ${fp.g_code}`,
    `G in closure: ${fp.g_provable ? "yes" : "no"}`,
    `G unrolled: ${r.unrolling.overall}`,
    `H: ${r.j.h_gap}   J: ${r.j.j_gap}   (classically J: ${r.j.j_classical ? "T" : "F"})`,
  ].join("\n");
  const table = document.createElement("table");
  const head = document.createElement("tr");
  for (const h of ["n", "K_n", "empty"]) {
    const th = document.createElement("th");
    th.textContent = h;
    head.append(th);
  }
  table.append(head);
  for (const k of r.unrolling.instances) {
    const tr = document.createElement("tr");
    const n = k.is_g ? "<G>" : (k.n.length > 12 ? k.n.slice(0, 10) + "…" : k.n);
    tr.append(cell(n), cell(k.verdict, k.verdict), cell(k.empty_terms.join(", ")));
    table.append(tr);
  }
  out.replaceChildren(summary, table);
}

await init();
$("system").value = default_system();
$("prop-run").onclick = showTable;
$("fol-run").onclick = showModel;
$("godel-run").onclick = showGodel;
showTable();
showModel();
showGodel();
