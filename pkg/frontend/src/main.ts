import { createApi } from "./api.js";
import { EditorController } from "./controller.js";
import { renderPopup, renderScoreBar, renderStatus, renderTokens } from "./render.js";

const api = createApi("");
const controller = new EditorController(api);

const input = document.getElementById("editor") as HTMLTextAreaElement;
const barFill = document.getElementById("bar-fill")!;
const barLabel = document.getElementById("bar-label")!;
const annotated = document.getElementById("annotated")!;
const popup = document.getElementById("popup")!;
const status = document.getElementById("status")!;
const feedbackBox = document.getElementById("feedback-comment") as HTMLTextAreaElement;
const feedbackButton = document.getElementById("feedback-submit")!;
const feedbackNotice = document.getElementById("feedback-notice")!;
const scoreSelectionButton = document.getElementById("score-selection")!;

controller.subscribe(() => {
  const state = controller.state;
  renderScoreBar(barFill, barLabel, state.score ? state.score.score_0_100 : null);
  renderTokens(annotated, state.text, state.score ? state.score.tokens : []);
  renderPopup(popup, state.popup, (index) => {
    const candidate = state.popup?.suggestions.candidates[index];
    if (candidate) void controller.onPick(candidate);
  });
  renderStatus(status, state);
  feedbackNotice.textContent = state.feedbackNotice ?? "";
});

input.addEventListener("input", () => controller.onEdit(input.value));

annotated.addEventListener("mouseover", (event) => {
  const target = event.target as HTMLElement;
  if (target.dataset.index !== undefined) {
    void controller.onHover(Number(target.dataset.index));
  }
});

annotated.addEventListener("mouseleave", () => controller.closePopup());
popup.addEventListener("mouseover", (event) => event.stopPropagation());

function selectedTokenRange(): { start_token: number; end_token: number } | null {
  const selection = window.getSelection();
  if (!selection || selection.isCollapsed) return null;
  const indices: number[] = [];
  annotated.querySelectorAll<HTMLElement>(".token").forEach((el) => {
    if (selection.containsNode(el, true)) {
      indices.push(Number(el.dataset.index));
    }
  });
  if (indices.length === 0) return null;
  return { start_token: Math.min(...indices), end_token: Math.max(...indices) + 1 };
}

scoreSelectionButton.addEventListener("click", () => {
  const span = selectedTokenRange();
  if (span) void controller.onSelect(span);
});

feedbackButton.addEventListener("click", async () => {
  const ok = await controller.submitFeedback(feedbackBox.value);
  if (ok) feedbackBox.value = "";
});
