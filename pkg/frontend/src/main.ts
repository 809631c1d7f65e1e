// Application shell: upload & list, ontology detail, form preview with live
// configuration, and data entry with reopen-for-edit.

import { ApiClient, ApiError } from "./api.js";
import { ConfigDraft, FormState } from "./state.js";
import {
  renderClassTree,
  renderForm,
  renderIndividualsTable,
  renderOntologyTable,
  renderPropertiesTable,
} from "./render.js";
import type { OntologyDetail } from "./types.js";

interface AppContext {
  api: ApiClient;
  root: HTMLElement;
  ontologyId?: string;
  detail?: OntologyDetail;
  selectedClass?: string;
  draft?: ConfigDraft;
  entryState?: FormState;
  editingIri?: string;
}

function section(title: string): HTMLElement {
  const wrap = document.createElement("section");
  const heading = document.createElement("h2");
  heading.textContent = title;
  wrap.appendChild(heading);
  return wrap;
}

function errorBanner(target: HTMLElement, error: unknown): void {
  const banner = document.createElement("div");
  banner.className = "of-error";
  if (error instanceof ApiError) {
    const where = error.detail && "line" in error.detail
      ? ` (line ${error.detail.line}, column ${error.detail.column})` : "";
    banner.textContent = `${error.code}: ${error.message}${where}`;
  } else {
    banner.textContent = String(error);
  }
  target.prepend(banner);
}

async function refreshOntologyList(ctx: AppContext): Promise<void> {
  const container = ctx.root.querySelector("#of-ontologies")!;
  container.textContent = "";
  const rows = await ctx.api.listOntologies();
  container.appendChild(renderOntologyTable(rows, (id) => {
    void openDetail(ctx, id);
  }));
}

function uploadView(ctx: AppContext): HTMLElement {
  const wrap = section("Gestión de ontologías");
  const form = document.createElement("form");
  form.className = "of-upload";
  const file = document.createElement("input");
  file.type = "file";
  file.accept = ".ttl,.turtle,text/turtle";
  const submit = document.createElement("button");
  submit.type = "submit";
  submit.textContent = "Subir ontología";
  form.appendChild(file);
  form.appendChild(submit);
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const chosen = file.files?.[0];
    if (!chosen) return;
    void chosen.text().then(async (turtle) => {
      try {
        await ctx.api.uploadOntology(chosen.name, turtle);
        await refreshOntologyList(ctx);
      } catch (error) {
        errorBanner(wrap, error);
      }
    });
  });
  wrap.appendChild(form);
  const list = document.createElement("div");
  list.id = "of-ontologies";
  wrap.appendChild(list);
  return wrap;
}

async function openDetail(ctx: AppContext, id: string): Promise<void> {
  ctx.ontologyId = id;
  ctx.detail = await ctx.api.ontologyDetail(id);
  ctx.draft = new ConfigDraft(await ctx.api.getConfig(id));
  renderDetail(ctx);
}

function renderDetail(ctx: AppContext): void {
  const container = ctx.root.querySelector("#of-detail")!;
  container.textContent = "";
  if (!ctx.detail) return;
  const wrap = section("Detalle de la ontología");

  const columns = document.createElement("div");
  columns.className = "of-columns";

  const treeCol = document.createElement("div");
  treeCol.appendChild(renderClassTree(ctx.detail.classes, (classIri) => {
    ctx.selectedClass = classIri;
    void refreshPreview(ctx);
  }));
  columns.appendChild(treeCol);

  const propsCol = document.createElement("div");
  propsCol.id = "of-properties";
  propsCol.appendChild(renderPropertiesTable(ctx.detail.properties));
  columns.appendChild(propsCol);

  const indCol = document.createElement("div");
  indCol.appendChild(renderIndividualsTable(ctx.detail.individuals));
  columns.appendChild(indCol);

  wrap.appendChild(columns);
  container.appendChild(wrap);
}

async function refreshPreview(ctx: AppContext): Promise<void> {
  const container = ctx.root.querySelector("#of-preview")!;
  container.textContent = "";
  if (!ctx.ontologyId || !ctx.selectedClass) return;
  const wrap = section(`Preview Formulario`);
  try {
    const structure = await ctx.api.formFor(ctx.ontologyId, ctx.selectedClass);
    const preview = new FormState(structure);
    wrap.appendChild(renderForm(preview, { onChange: () => {}, readOnly: true }));
    // the properties panel mirrors exactly what the form would ask for
    const shown = new Set(structure.elements.map((e) => e.property));
    const propsCol = ctx.root.querySelector("#of-properties");
    if (propsCol && ctx.detail) {
      propsCol.textContent = "";
      propsCol.appendChild(renderPropertiesTable(
        ctx.detail.properties.filter((row) => shown.has(row.iri))));
    }
    wrap.appendChild(configView(ctx));
    wrap.appendChild(entryView(ctx, structure.mainClass));
  } catch (error) {
    errorBanner(wrap, error);
  }
  container.appendChild(wrap);
}

function configView(ctx: AppContext): HTMLElement {
  const wrap = section("Configuración de ontología");
  if (!ctx.draft || !ctx.ontologyId) return wrap;
  const draft = ctx.draft;

  const hiddenList = document.createElement("ul");
  hiddenList.className = "of-hidden-list";
  for (const iri of [...draft.hiddenProperties].sort()) {
    const item = document.createElement("li");
    item.textContent = iri;
    const remove = document.createElement("button");
    remove.type = "button";
    remove.textContent = "Delete";
    remove.addEventListener("click", () => {
      draft.unhide(iri);
      void saveConfigAndRefresh(ctx);
    });
    item.appendChild(remove);
    hiddenList.appendChild(item);
  }
  wrap.appendChild(hiddenList);

  const hideForm = document.createElement("form");
  const uri = document.createElement("input");
  uri.placeholder = "Ingrese uri";
  const hideButton = document.createElement("button");
  hideButton.type = "submit";
  hideButton.textContent = "Hide property";
  hideForm.appendChild(uri);
  hideForm.appendChild(hideButton);
  hideForm.addEventListener("submit", (event) => {
    event.preventDefault();
    if (uri.value) {
      draft.hide(uri.value);
      void saveConfigAndRefresh(ctx);
    }
  });
  wrap.appendChild(hideForm);

  const pairForm = document.createElement("form");
  const context = document.createElement("input");
  context.placeholder = "Ingrese Main Class uri";
  const range = document.createElement("input");
  range.placeholder = "Ingrese uri";
  const pairButton = document.createElement("button");
  pairButton.type = "submit";
  pairButton.textContent = "Create in place";
  pairForm.appendChild(context);
  pairForm.appendChild(range);
  pairForm.appendChild(pairButton);
  pairForm.addEventListener("submit", (event) => {
    event.preventDefault();
    if (context.value && range.value) {
      draft.addInlinePair(context.value, range.value);
      void saveConfigAndRefresh(ctx);
    }
  });
  wrap.appendChild(pairForm);
  return wrap;
}

async function saveConfigAndRefresh(ctx: AppContext): Promise<void> {
  if (!ctx.draft || !ctx.ontologyId) return;
  const saved = await ctx.api.putConfig(ctx.ontologyId, ctx.draft.toWire());
  ctx.draft.markSaved(saved);
  await refreshPreview(ctx);
}

function entryView(ctx: AppContext, mainClass: string): HTMLElement {
  const wrap = section("Data entry");
  if (!ctx.ontologyId) return wrap;
  const host = document.createElement("div");
  wrap.appendChild(host);

  const start = async (classIri: string, editIri?: string) => {
    const structure = await ctx.api.formFor(ctx.ontologyId!, classIri);
    ctx.entryState = new FormState(structure);
    ctx.editingIri = editIri;
    if (editIri) {
      const submission = await ctx.api.readIndividual(
        ctx.ontologyId!, editIri, classIri);
      ctx.entryState.loadSubmission(submission);
    }
    draw();
  };

  const draw = () => {
    host.textContent = "";
    if (!ctx.entryState) return;
    host.appendChild(renderForm(ctx.entryState, {
      onChange: draw,
      onSubclassChosen: (classIri) => void start(classIri, ctx.editingIri),
    }));
    const submit = document.createElement("button");
    submit.type = "button";
    submit.className = "of-submit";
    submit.textContent = "Ingresar";
    submit.addEventListener("click", () => void send());
    host.appendChild(submit);
  };

  const send = async () => {
    if (!ctx.entryState || !ctx.ontologyId) return;
    try {
      const submission = ctx.entryState.buildSubmission();
      const outcome = ctx.editingIri
        ? await ctx.api.updateIndividual(
            ctx.ontologyId, ctx.editingIri, submission,
            ctx.entryState.structure.mainClass)
        : await ctx.api.createIndividual(ctx.ontologyId, submission);
      await start(ctx.entryState.structure.mainClass, outcome.rootIri);
    } catch (error) {
      errorBanner(host, error);
    }
  };

  void start(mainClass);
  return wrap;
}

export function mountApp(root: HTMLElement, api = new ApiClient()): AppContext {
  const ctx: AppContext = { api, root };
  root.textContent = "";
  root.appendChild(uploadView(ctx));
  const detail = document.createElement("div");
  detail.id = "of-detail";
  root.appendChild(detail);
  const preview = document.createElement("div");
  preview.id = "of-preview";
  root.appendChild(preview);
  void refreshOntologyList(ctx).catch(() => {
    // API not reachable yet; the list stays empty until the next action
  });
  return ctx;
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  mountApp(document.getElementById("app")!);
}
