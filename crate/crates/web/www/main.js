import init, { plan, construct, verify } from "./pkg/qls_web.js";

const $ = (id) => document.getElementById(id);

function showError(el, err) {
  el.innerHTML = "";
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = String(err);
  el.appendChild(p);
}

function colour(k, n) {
  // Spread hues evenly; the golden angle keeps neighbours apart.
  return `hsl(${(k * 137.508) % 360} 55% ${n > 40 ? 38 : 45}%)`;
}

function runPlan() {
  const out = $("plan-out");
  try {
    const rows = JSON.parse(plan(Number($("plan-order").value)));
    const table = document.createElement("table");
    table.className = "plan";
    for (const r of rows) {
      const tr = table.insertRow();
      tr.insertCell().textContent = r.c;
      const st = tr.insertCell();
      st.textContent = r.status;
      st.className = r.status;
      tr.insertCell().textContent = r.provenance;
    }
    out.replaceChildren(table);
  } catch (e) {
    showError(out, e);
  }
}

function drawGrid(order, classOf) {
  const grid = $("grid");
  const n = Math.max(...classOf) + 1;
  grid.style.gridTemplateColumns = `repeat(${order}, minmax(0, 2.2rem))`;
  grid.replaceChildren(
    ...classOf.map((k) => {
      const d = document.createElement("div");
      d.style.background = colour(k, n);
      d.textContent = k;
      return d;
    }),
  );
}

function runBuild() {
  const info = $("build-info");
  const order = Number($("build-order").value);
  try {
    const b = JSON.parse(construct(order, Number($("build-c").value)));
    info.textContent = `${b.provenance}: predicted ${b.predicted}, measured ${b.measured}`;
    drawGrid(order, b.class_of);
    $("doc").value = JSON.stringify(b.document, null, 1);
  } catch (e) {
    $("grid").replaceChildren();
    showError(info, e);
  }
}

function runVerify() {
  const out = $("verify-out");
  try {
    const r = JSON.parse(verify($("doc").value));
    const lines = [`valid: ${r.valid}`, `worst deviation: ${r.worst_deviation.toExponential(3)}`];
    if (r.failure) lines.push(`first failure: ${r.failure}`);
    if (r.cardinality !== null) lines.push(`cardinality: ${r.cardinality}`);
    if (r.error) lines.push(`error: ${r.error}`);
    out.textContent = lines.join("\n");
    if (r.class_of) drawGrid(Math.round(Math.sqrt(r.class_of.length)), r.class_of);
  } catch (e) {
    out.textContent = `error: ${e}`;
  }
}

await init();
$("plan-run").onclick = runPlan;
$("build-run").onclick = runBuild;
$("verify-run").onclick = runVerify;
runPlan();
