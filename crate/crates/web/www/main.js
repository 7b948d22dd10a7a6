import init, { analyzeCircle, analyzeBoxes, analyzeCode } from "./pkg/neurocode_web.js";

const COLORS = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"];
const GRID = 360;
const PLANE_W = 24;
const PLANE_H = 16;

function show(el, report, render) {
  if (report.error) {
    el.className = "error";
    el.textContent = report.error;
  } else {
    el.className = "";
    el.textContent = render(report);
  }
}

function topologyText(t) {
  const betti = t.betti.map((b, i) => `b${i}=${b}`).join(" ");
  return [
    `facets: ${t.facets.map((f) => "{" + f.join(",") + "}").join(" ") || "(none)"}`,
    `f-vector: (${t.f_vector.join(",")})`,
    `betti: ${betti}`,
    `pi1: ${t.pi1_generators} generators, ${t.pi1_relations} relations`,
    `Helly lower bound on dimension: ${t.helly_lower_bound}`,
  ].join("\n");
}

// Circle

let arcs = [[0, 200], [120, 200], [240, 200]];

function renderArcTable() {
  const table = document.getElementById("arcs");
  table.innerHTML = "";
  arcs.forEach((arc, i) => {
    const row = table.insertRow();
    row.insertCell().innerHTML = `<span style="color:${COLORS[i % COLORS.length]}">U${i + 1}</span>`;
    ["start", "length"].forEach((label, j) => {
      const cell = row.insertCell();
      const input = document.createElement("input");
      input.type = "number";
      input.min = j === 0 ? 0 : 1;
      input.max = GRID - 1;
      input.value = arc[j];
      input.title = label;
      input.addEventListener("input", () => {
        arcs[i][j] = Number(input.value);
        updateCircle();
      });
      cell.appendChild(input);
    });
  });
}

function drawCircle(report) {
  const canvas = document.getElementById("circle");
  const ctx = canvas.getContext("2d");
  const cx = canvas.width / 2;
  const cy = canvas.height / 2;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const angle = (k) => (k / GRID) * 2 * Math.PI - Math.PI / 2;

  ctx.lineWidth = 1;
  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.arc(cx, cy, 60, 0, 2 * Math.PI);
  ctx.stroke();

  arcs.forEach(([start, len], i) => {
    ctx.strokeStyle = COLORS[i % COLORS.length];
    ctx.lineWidth = 8;
    ctx.beginPath();
    ctx.arc(cx, cy, 80 + 14 * i, angle(start), angle(start + len));
    ctx.stroke();
  });

  if (!report.error) {
    ctx.font = "11px monospace";
    ctx.fillStyle = "#222";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    for (const seg of report.segments) {
      const mid = angle((seg.start + seg.end + 1) / 2);
      ctx.fillText(seg.word, cx + 40 * Math.cos(mid), cy + 40 * Math.sin(mid));
    }
  }
}

function updateCircle() {
  const flat = new Uint32Array(arcs.flat().map((x) => Math.max(0, x | 0)));
  const report = JSON.parse(analyzeCircle(GRID, flat));
  drawCircle(report);
  show(document.getElementById("circle-out"), report, (r) =>
    [
      `code (${r.code.length} words): ${r.code.join(" ")}`,
      `nerve equals code complex: ${r.nerve_equals_delta}`,
      topologyText(r.topology),
    ].join("\n"),
  );
}

document.getElementById("add-arc").addEventListener("click", () => {
  if (arcs.length < 8) {
    arcs.push([Math.floor(Math.random() * GRID), 90]);
    renderArcTable();
    updateCircle();
  }
});
document.getElementById("drop-arc").addEventListener("click", () => {
  if (arcs.length > 1) {
    arcs.pop();
    renderArcTable();
    updateCircle();
  }
});

// Plane

let boxes = [[2, 2, 11, 9], [8, 5, 19, 13]];
let dragStart = null;
let dragNow = null;

function cellOf(canvas, event) {
  const rect = canvas.getBoundingClientRect();
  const x = Math.floor(((event.clientX - rect.left) / rect.width) * PLANE_W);
  const y = Math.floor(((event.clientY - rect.top) / rect.height) * PLANE_H);
  return [Math.min(PLANE_W - 1, Math.max(0, x)), Math.min(PLANE_H - 1, Math.max(0, y))];
}

function drawPlane(report) {
  const canvas = document.getElementById("plane");
  const ctx = canvas.getContext("2d");
  const s = canvas.width / PLANE_W;
  ctx.clearRect(0, 0, canvas.width, canvas.height);

  if (!report.error) {
    const palette = new Map();
    report.code.forEach((w, i) => palette.set(w, `hsl(${(i * 137) % 360} 60% 88%)`));
    for (let y = 0; y < PLANE_H; y++) {
      for (let x = 0; x < PLANE_W; x++) {
        const w = report.patterns[y * PLANE_W + x];
        if (/1/.test(w)) {
          ctx.fillStyle = palette.get(w);
          ctx.fillRect(x * s, y * s, s, s);
        }
      }
    }
  }

  const outline = (b, color, dash) => {
    const [x0, y0, x1, y1] = [Math.min(b[0], b[2]), Math.min(b[1], b[3]), Math.max(b[0], b[2]), Math.max(b[1], b[3])];
    ctx.setLineDash(dash);
    ctx.strokeStyle = color;
    ctx.lineWidth = 2;
    ctx.strokeRect(x0 * s + 1, y0 * s + 1, (x1 - x0 + 1) * s - 2, (y1 - y0 + 1) * s - 2);
    ctx.setLineDash([]);
  };
  boxes.forEach((b, i) => outline(b, COLORS[i % COLORS.length], []));
  if (dragStart && dragNow) outline([...dragStart, ...dragNow], "#555", [4, 3]);
}

function updatePlane() {
  const report = JSON.parse(analyzeBoxes(PLANE_W, PLANE_H, new Int32Array(boxes.flat())));
  drawPlane(report);
  show(document.getElementById("plane-out"), report, (r) =>
    [
      `${boxes.length} rectangles, code (${r.code.length} words): ${r.code.join(" ")}`,
      `nerve equals code complex: ${r.nerve_equals_delta}`,
      topologyText(r.topology),
    ].join("\n"),
  );
}

const plane = document.getElementById("plane");
plane.addEventListener("mousedown", (e) => {
  dragStart = cellOf(plane, e);
  dragNow = dragStart;
});
plane.addEventListener("mousemove", (e) => {
  if (dragStart) {
    dragNow = cellOf(plane, e);
    updatePlane();
  }
});
window.addEventListener("mouseup", () => {
  if (dragStart && boxes.length < 8) boxes.push([...dragStart, ...dragNow]);
  dragStart = dragNow = null;
  updatePlane();
});
document.getElementById("clear-boxes").addEventListener("click", () => {
  boxes = [];
  updatePlane();
});

// Code

function updateCode() {
  const report = JSON.parse(analyzeCode(document.getElementById("code-in").value));
  show(document.getElementById("code-out"), report, (r) =>
    [
      `code: ${r.code.join(" ")}`,
      `simplicial: ${r.simplicial}`,
      `completion: ${r.completion.join(" ")}`,
      `indicator polynomial: ${r.polynomial}`,
      `canonical form:`,
      ...r.canonical_form.map((z, i) => `  ${z}    ${r.relations[i]}`),
      topologyText(r.topology),
    ].join("\n"),
  );
}
document.getElementById("code-in").addEventListener("input", updateCode);

await init();
renderArcTable();
updateCircle();
updatePlane();
updateCode();
